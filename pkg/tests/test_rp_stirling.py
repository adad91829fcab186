import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rpbell.oracle import count_by_blocks
from rpbell.rp_stirling import (
    RestrictionVector,
    a_coeffs,
    a_coeffs_from_stirling,
    restriction_grid,
    rp_stirling2,
    rp_stirling2_via_reduction,
)
from rpbell.stirling_core import r_stirling2, stirling2


def test_restriction_vector_canonical():
    r = RestrictionVector((3, 1, 2))
    assert r.parts == (1, 2, 3)
    assert (r.total, r.last, r.prefix, r.prefix_total, r.p) == (6, 3, (1, 2), 3, 3)
    assert RestrictionVector.parse("2, 2") == RestrictionVector((2, 2))
    assert r.increment_last(2).parts == (1, 2, 5)


@pytest.mark.parametrize("bad", [(), (0,), (2, 0), (-1, 3)])
def test_restriction_vector_rejects(bad):
    with pytest.raises(ValueError):
        RestrictionVector(bad)


def test_restriction_grid():
    grid = restriction_grid()
    assert len(grid) == 15
    assert {r.p for r in grid} == {1, 2, 3}
    assert all(r.total <= 5 for r in grid)


def test_a_coeffs_examples():
    assert a_coeffs((2,)) == (0, -1, 1)
    assert a_coeffs(()) == (1,)
    assert a_coeffs((1, 1)) == (0, 0, 1)


@given(st.lists(st.integers(1, 4), max_size=3))
def test_a_coeffs_paths_agree(prefix):
    prefix = tuple(sorted(prefix))
    a = a_coeffs(prefix)
    assert a == a_coeffs_from_stirling(prefix)
    total = sum(prefix)
    assert len(a) == total + 1 and a[-1] == 1
    assert all(a[k] == 0 for k in range(len(prefix)) if k < len(prefix))
    assert all(a[k] * (-1) ** (total - k) >= 0 for k in range(total + 1))


def test_rp_stirling2_examples():
    assert rp_stirling2(4, 2, (2, 2)) == 2
    assert rp_stirling2(4, 3, (2, 2)) == 4
    for n in range(1, 9):
        for k in range(9):
            assert rp_stirling2(n, k, (1,)) == stirling2(n, k)


def test_rp_stirling2_domain():
    with pytest.raises(ValueError):
        rp_stirling2(3, 2, (2, 2))
    with pytest.raises(ValueError):
        rp_stirling2_via_reduction(3, 2, (2, 2))


def test_reduction_examples():
    assert rp_stirling2_via_reduction(4, 2, (2, 2)) == 2
    assert rp_stirling2_via_reduction(4, 4, (2, 2)) == 1
    assert rp_stirling2_via_reduction(5, 2, (1, 2)) == r_stirling2(5, 2, 2)


def test_three_way_agreement_small():
    for r in restriction_grid(4, 3):
        for n in range(r.total, 9):
            counts = count_by_blocks(n, r.parts)
            for k in range(n + 1):
                assert rp_stirling2(n, k, r) == rp_stirling2_via_reduction(n, k, r) == counts[k]


def test_vacuous_parts_do_not_change_counts():
    for base in [(2,), (2, 3), (3,)]:
        for extra in range(1, 3):
            r2 = base + (1,) * extra
            for n in range(sum(r2), 9):
                # element positions shift but the count is relabeling-invariant
                for k in range(n + 1):
                    assert rp_stirling2(n, k, r2) == rp_stirling2(n, k, base)


def test_permuted_layout_matches_canonical():
    for parts in [(1, 2, 2), (1, 3), (2, 3)]:
        for perm in set(itertools.permutations(parts)):
            for n in range(sum(parts), 9):
                counts = count_by_blocks(n, perm)
                assert counts == [rp_stirling2(n, k, parts) for k in range(n + 1)]


def test_support():
    for r in restriction_grid():
        for n in range(r.total, 10):
            for k in range(n + 2):
                positive = rp_stirling2(n, k, r) > 0
                assert positive == (r.last <= k <= n)
                assert rp_stirling2(n, k, r) >= 0
