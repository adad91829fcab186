import threading

import pytest

from rpbell.exact_arith import IntPolynomial, falling_factorial_poly, rising_factorial_poly
from rpbell.oracle import count_by_blocks
from rpbell.stirling_core import (
    StirlingTable,
    bell_number,
    r_stirling1_unsigned,
    r_stirling2,
    stirling1_unsigned,
    stirling2,
)


def test_stirling2_examples():
    assert stirling2(4, 2) == 7
    assert stirling2(0, 0) == 1
    assert stirling2(3, 5) == 0


def test_stirling2_matches_oracle():
    for n in range(9):
        assert [stirling2(n, k) for k in range(n + 1)] == count_by_blocks(n)


def test_row_sums_are_bell_numbers():
    assert [bell_number(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


def test_stirling1_unsigned_examples():
    assert stirling1_unsigned(4, 2) == 11
    assert all(stirling1_unsigned(n, n) == 1 for n in range(13))
    assert stirling1_unsigned(3, 0) == 0


def test_stirling1_is_rising_factorial_expansion():
    for n in range(9):
        poly = rising_factorial_poly(0, n)
        assert tuple(stirling1_unsigned(n, k) for k in range(n + 1)) == poly.coeffs


def test_r_stirling2_examples():
    assert r_stirling2(3, 2, 2) == 2
    assert r_stirling2(2, 2, 2) == 1
    for n in range(9):
        for k in range(9):
            assert r_stirling2(n, k, 0) == stirling2(n, k)


def test_r_stirling_rejects_small_n():
    with pytest.raises(ValueError):
        r_stirling2(1, 1, 2)
    with pytest.raises(ValueError):
        r_stirling1_unsigned(2, 1, 3)


def test_r_stirling1_examples():
    assert r_stirling1_unsigned(4, 3, 3) == 3
    for r in range(9):
        for n in range(r, 9):
            assert r_stirling1_unsigned(n, n, r) == 1
    for n in range(9):
        for k in range(9):
            assert r_stirling1_unsigned(n, k, 0) == stirling1_unsigned(n, k)


def test_r_stirling1_rising_factorial_expansion():
    # sum_j [n+r, j+r]_r x^j = (x + r)(x + r + 1)...(x + r + n - 1)
    for r in range(5):
        for n in range(9):
            poly = IntPolynomial(tuple(r_stirling1_unsigned(n + r, j + r, r) for j in range(n + 1)))
            assert poly == rising_factorial_poly(r, n)
            for k in range(9):
                assert poly(k) == rising_factorial_poly(r, n)(k)


def test_falling_form_of_the_expansion_fails():
    # (k+r) falling n differs from the sum once n >= 2 (r = 3, n = 2, k = 0: 6 vs 12)
    poly = IntPolynomial(tuple(r_stirling1_unsigned(5, j + 3, 3) for j in range(3)))
    assert poly(0) == 12
    assert falling_factorial_poly(3, 2)(0) == 6


def test_r_stirling2_matches_oracle():
    for r in range(5):
        for n in range(max(r, 1), 11):
            counts = count_by_blocks(n, (r,) if r else ())
            assert [r_stirling2(n, k, r) for k in range(n + 1)] == counts


def test_table_entries_outside_triangle_are_zero():
    t = StirlingTable("r_second", 2)
    assert t(5, -1) == 0
    assert t(5, 6) == 0
    assert t(5, 1) == 0


def test_table_rows_stable_under_extension():
    t = StirlingTable("second")
    row4 = t.row(4)
    t.row(20)
    assert t.row(4) is row4


def test_concurrent_extension():
    t = StirlingTable("r_first_unsigned", 2)
    out = []
    threads = [threading.Thread(target=lambda n=n: out.append(t.row(30 + n))) for n in range(8)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert all(len(row) == 31 + i for i, row in enumerate(t.rows[28:]))


def test_unknown_kind():
    with pytest.raises(ValueError):
        StirlingTable("third")
