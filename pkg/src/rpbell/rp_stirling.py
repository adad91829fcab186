"""(r_1, ..., r_p)-Stirling numbers of the second kind.

``rp_stirling2(n, k, r)`` counts partitions of [n] into k blocks such that
each of the consecutive intervals R_1 = {1..r_1}, R_2 = {r_1+1..r_1+r_2}, ...
has its elements in pairwise distinct blocks.  Two independent algorithms
are provided: expansion of P_m(z; r) in the falling-factorial basis, and a
reduction to ordinary r-Stirling numbers through the a_k coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence

from .exact_arith import IntPolynomial, falling_factorial_poly, to_falling_basis
from .stirling_core import r_stirling2, stirling1_unsigned


@dataclass(frozen=True, init=False)
class RestrictionVector:
    """Sorted tuple of block-separation interval sizes, all >= 1."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(x) for x in parts)
        if not parts:
            raise ValueError("a restriction vector needs at least one part")
        if any(x < 1 for x in parts):
            raise ValueError(f"restriction parts must be >= 1, got {parts}")
        object.__setattr__(self, "parts", tuple(sorted(parts)))

    @classmethod
    def parse(cls, text: str) -> RestrictionVector:
        """From a comma list such as ``"2,2"``."""
        items = [s for s in text.replace(" ", "").split(",") if s]
        return cls(int(s) for s in items)

    @property
    def p(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def last(self) -> int:
        return self.parts[-1]

    @property
    def prefix(self) -> tuple[int, ...]:
        return self.parts[:-1]

    @property
    def prefix_total(self) -> int:
        return sum(self.parts[:-1])

    def increment_last(self, j: int = 1) -> RestrictionVector:
        """r + j e_p (the last part stays the largest, so order is kept)."""
        return RestrictionVector(self.parts[:-1] + (self.parts[-1] + j,))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)

    def __repr__(self) -> str:
        return f"RestrictionVector({self.parts})"


def as_restriction(r) -> RestrictionVector:
    if isinstance(r, RestrictionVector):
        return r
    if isinstance(r, int):
        return RestrictionVector((r,))
    if isinstance(r, str):
        return RestrictionVector.parse(r)
    return RestrictionVector(r)


@lru_cache(maxsize=None)
def a_coeffs(prefix: tuple[int, ...] = ()) -> tuple[int, ...]:
    """Coefficients of u^(falling r_1) ... u^(falling r_{p-1}), lowest degree first."""
    poly = IntPolynomial.constant(1)
    for ri in prefix:
        poly = poly * falling_factorial_poly(0, ri)
    total = sum(prefix)
    return tuple(poly[k] for k in range(total + 1))


def a_coeffs_from_stirling(prefix: Sequence[int] = ()) -> tuple[int, ...]:
    """Same coefficients from the signed sum over products of [r_i, j_i]."""
    prefix = tuple(prefix)
    total = sum(prefix)
    out = [0] * (total + 1)
    for js in product(*(range(ri + 1) for ri in prefix)):
        term = 1
        for ri, ji in zip(prefix, js):
            term *= stirling1_unsigned(ri, ji)
            if term == 0:
                break
        if term:
            out[sum(js)] += term
    return tuple((-1) ** (total - k) * c for k, c in enumerate(out))


def poly_P(n: int, r) -> IntPolynomial:
    """P_n(z; r) = (z + r_p)**n (z + r_p)^(falling r_1) ... (z + r_p)^(falling r_{p-1})."""
    r = as_restriction(r)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    poly = IntPolynomial((r.last, 1)) ** n
    for ri in r.prefix:
        poly = poly * falling_factorial_poly(r.last, ri)
    return poly


@lru_cache(maxsize=None)
def _falling_row(m: int, r: RestrictionVector) -> tuple[int, ...]:
    return to_falling_basis(poly_P(m, r))


def rp_stirling2(n: int, k: int, r) -> int:
    """Count of admissible partitions of [n] into k blocks (falling-basis route)."""
    r = as_restriction(r)
    if n < r.total:
        raise ValueError(f"n = {n} is smaller than |r| = {r.total}")
    row = _falling_row(n - r.total, r)
    idx = k - r.last
    if idx < 0 or idx >= len(row):
        return 0
    return row[idx]


def rp_stirling2_via_reduction(n: int, k: int, r) -> int:
    """Same count as sum_j {m + j + r_p, k}_{r_p} a_j(prefix), with m = n - |r|."""
    r = as_restriction(r)
    if n < r.total:
        raise ValueError(f"n = {n} is smaller than |r| = {r.total}")
    if k < r.last:
        return 0
    m = n - r.total
    return sum(
        a * r_stirling2(m + j + r.last, k, r.last)
        for j, a in enumerate(a_coeffs(r.prefix))
        if a
    )


def restriction_grid(max_total: int = 5, max_parts: int = 3) -> list[RestrictionVector]:
    """Every sorted restriction vector with |r| <= max_total and p <= max_parts."""
    out: list[RestrictionVector] = []

    def rec(prefix: tuple[int, ...], lo: int, remaining: int):
        if prefix:
            out.append(RestrictionVector(prefix))
        if len(prefix) == max_parts:
            return
        for x in range(lo, remaining + 1):
            rec(prefix + (x,), x, remaining - x)

    rec((), 1, max_total)
    return sorted(out, key=lambda v: (v.p, v.parts))
