from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rpbell.exact_arith import (
    IntPolynomial,
    TruncatedSeries,
    falling_factorial_poly,
    format_rational,
    from_falling_basis,
    parse_rational,
    poly_compose_series,
    poly_mul,
    series_exp,
    series_mul,
    to_falling_basis,
)

P = IntPolynomial
small_ints = st.integers(min_value=-50, max_value=50)
polys = st.lists(small_ints, max_size=8).map(lambda cs: P(tuple(cs)))
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def series(order):
    return st.lists(rationals, min_size=order + 1, max_size=order + 1).map(
        lambda cs: TruncatedSeries(tuple(cs), order)
    )


def test_poly_mul_examples():
    assert poly_mul(P((1, 1)), P((1, -1))) == P((1, 0, -1))
    assert poly_mul(P.z(), P()) == P()
    assert poly_mul(P((0, -1, 1)), P((-1, 1))) == P((0, 1, -2, 1))


def test_trailing_zeros_trimmed():
    assert P((3, 0, 0)).coeffs == (3,)
    assert P((0, 0)).degree == -1


def test_falling_factorial_examples():
    assert falling_factorial_poly(0, 2) == P((0, -1, 1))
    assert falling_factorial_poly(2, 2) == P((2, 3, 1))
    assert falling_factorial_poly(5, 0) == P((1,))


def test_to_falling_basis_examples():
    assert to_falling_basis(P((0, 0, 1))) == (0, 1, 1)
    assert to_falling_basis(P((7,))) == (7,)
    assert to_falling_basis(P((0, 0, 0, 1))) == (0, 1, 3, 1)


@given(st.lists(small_ints, max_size=13))
def test_falling_basis_round_trip(cs):
    p = P(tuple(cs))
    assert from_falling_basis(to_falling_basis(p)) == p


@given(polys, polys, polys)
def test_polynomial_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


def test_poly_degree_of_product():
    a, b = P((1, 2, 3)), P((4, 5))
    assert (a * b).degree == a.degree + b.degree


def test_series_exp_examples():
    assert series_exp(TruncatedSeries.variable(3)).coeffs == (1, 1, Fraction(1, 2), Fraction(1, 6))
    assert series_exp(TruncatedSeries.constant(0, 5)).coeffs == (1, 0, 0, 0, 0, 0)
    assert series_exp(TruncatedSeries.variable(2, 2)).coeffs == (1, 2, 2)


def test_series_exp_rejects_constant_term():
    with pytest.raises(ValueError):
        series_exp(TruncatedSeries.constant(1, 3))


def test_series_mul_examples():
    a = TruncatedSeries((1, 1), 2)
    b = TruncatedSeries((1, -1), 2)
    assert series_mul(a, b).coeffs == (1, 0, -1)
    one = TruncatedSeries.constant(1, 4)
    s = TruncatedSeries((3, Fraction(1, 2), -7, 0, 2), 4)
    assert series_mul(s, one) == s
    geo = TruncatedSeries((1, 1, 1, 1, 1), 4)
    assert series_mul(geo, TruncatedSeries((1, -1), 4)).coeffs == (1, 0, 0, 0, 0)


def test_series_mul_takes_min_order():
    a = TruncatedSeries((1, 2, 3), 2)
    b = TruncatedSeries((1, 1, 1, 1, 1), 4)
    assert series_mul(a, b).order == 2
    assert (a + b).order == 2


def test_series_never_claims_unknown_coefficients():
    s = TruncatedSeries((1, 2), 3)
    with pytest.raises(IndexError):
        s[4]
    with pytest.raises(ValueError):
        s.truncate(5)
    assert s.derivative().order == 2


def test_poly_compose_series_examples():
    s = TruncatedSeries((1, 1), 2)
    assert poly_compose_series(P((0, 0, 1)), s).coeffs == (1, 2, 1)
    assert poly_compose_series(P((5,)), s).coeffs == (5, 0, 0)
    assert poly_compose_series(P((2, 1)), TruncatedSeries.variable(3)).coeffs == (2, 1, 0, 0)


@settings(max_examples=50)
@given(series(5), series(5), series(5))
def test_series_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40)
@given(series(6), series(6))
def test_series_exp_homomorphism(a, b):
    a = a - a.coeffs[0]
    b = b - b.coeffs[0]
    assert series_exp(a + b) == series_mul(series_exp(a), series_exp(b))


@given(series(4), series(4))
def test_rationals_stay_canonical(a, b):
    from math import gcd

    for c in (a * b + a).coeffs:
        assert c.denominator > 0
        assert gcd(abs(c.numerator), c.denominator) == 1


def test_rational_serialization():
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(7) == "7"
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational("4") == 4
