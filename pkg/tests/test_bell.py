from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rpbell.bell import bell_next, bell_poly, bell_tilde, r_bell_poly, verify_dobinski
from rpbell.exact_arith import IntPolynomial, to_falling_basis
from rpbell.oracle import count_by_blocks
from rpbell.rp_stirling import RestrictionVector, poly_P, restriction_grid, rp_stirling2

GRID = restriction_grid()


def test_bell_poly_examples():
    assert bell_poly(0, (2, 2)).coeffs == (2, 4, 1)
    assert bell_poly(1, (3,)).coeffs == (3, 1)
    assert bell_poly(0, (1,)).coeffs == (1,)


def test_bell_poly_from_oracle():
    counts = count_by_blocks(4, (2, 2))
    assert bell_poly(0, (2, 2)).coeffs == tuple(counts[2:5])


def test_degree_and_positivity():
    for r in GRID:
        for n in range(8):
            b = bell_poly(n, r)
            assert b.poly.degree == n + r.prefix_total
            assert all(c > 0 for c in b.coeffs)


def test_poly_P_examples():
    assert poly_P(0, (2, 2)) == IntPolynomial((2, 3, 1))
    assert poly_P(2, (1,)) == IntPolynomial((1, 2, 1))
    assert poly_P(1, (1, 1)) == IntPolynomial((1, 2, 1))


def test_bell_next_examples():
    assert bell_next(bell_poly(0, (1,))).poly == IntPolynomial((1, 1))
    assert bell_next(bell_poly(1, (3,))).poly == IntPolynomial((9, 7, 1))
    b = bell_poly(0, (2,))
    for _ in range(5):
        b = bell_next(b)
    assert b == bell_poly(5, (2,))


def test_bell_tilde_examples():
    assert bell_tilde(0, (2, 2)).coeffs == (1,)
    assert bell_tilde(1, (1,)).coeffs == (1, 1)
    assert bell_tilde(0, (1,)).coeffs == (1,)


def test_falling_basis_form():
    for r in GRID:
        for n in range(7):
            row = to_falling_basis(poly_P(n, r))
            assert row == tuple(rp_stirling2(n + r.total, k + r.last, r) for k in range(len(row)))


@given(st.sampled_from(GRID), st.integers(0, 6), st.fractions(min_value=0, max_value=10).filter(lambda x: x > 0))
def test_positive_at_positive_rationals(r, n, z):
    assert bell_poly(n, r)(z) > 0


def test_r_bell_poly_classical_and_single_part():
    assert r_bell_poly(3, 0).coeffs == (0, 1, 3, 1)
    assert r_bell_poly(5, 0)(1) == 52
    for r in range(1, 5):
        for n in range(6):
            assert r_bell_poly(n, r) == bell_poly(n, (r,)).poly


def test_dobinski_examples():
    rep = verify_dobinski(1, (1,), 8)
    assert rep.passed
    assert verify_dobinski(0, (1,), 4).passed
    assert verify_dobinski(2, (2, 2), 12).passed


def test_dobinski_order_precondition():
    with pytest.raises(ValueError):
        verify_dobinski(2, (2, 2), 4)


def test_dobinski_reports_mismatch(monkeypatch):
    import rpbell.bell as bell_mod

    real = bell_mod.poly_P
    monkeypatch.setattr(bell_mod, "poly_P", lambda n, r: real(n, r) + 1)
    rep = verify_dobinski(1, (1,), 6)
    assert not rep.passed
    assert rep.first_discrepancy.location == "z^0"
