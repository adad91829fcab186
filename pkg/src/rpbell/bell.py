"""(r_1, ..., r_p)-Bell polynomials and their variants.

B_n(z; r) = sum_k {n + |r|, k + r_p}_r z**k, of degree n + |r_{p-1}|.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact_arith import IntPolynomial, TruncatedSeries, series_exp
from .report import IdentityId, VerificationReport, compare_series
from .rp_stirling import RestrictionVector, as_restriction, poly_P, rp_stirling2
from .stirling_core import r_stirling2


@dataclass(frozen=True)
class BellPolynomial:
    n: int
    r: RestrictionVector
    poly: IntPolynomial

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.poly.coeffs

    def __call__(self, z):
        return self.poly(z)


@dataclass(frozen=True)
class BellTildePolynomial:
    n: int
    r: RestrictionVector
    poly: IntPolynomial

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.poly.coeffs

    def __call__(self, z):
        return self.poly(z)


@lru_cache(maxsize=None)
def _bell_poly(n: int, r: RestrictionVector) -> BellPolynomial:
    top = r.total + n
    coeffs = tuple(rp_stirling2(top, k + r.last, r) for k in range(n + r.prefix_total + 1))
    return BellPolynomial(n, r, IntPolynomial(coeffs))


def bell_poly(n: int, r) -> BellPolynomial:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _bell_poly(n, as_restriction(r))


def bell_next(b: BellPolynomial) -> BellPolynomial:
    """B_{n+1} = z B_n' + (z + r_p) B_n."""
    poly = b.poly.derivative().shift(1) + IntPolynomial((b.r.last, 1)) * b.poly
    return BellPolynomial(b.n + 1, b.r, poly)


@lru_cache(maxsize=None)
def _bell_tilde(n: int, r: RestrictionVector) -> BellTildePolynomial:
    top = r.total + n
    coeffs = tuple(rp_stirling2(top, k + r.total, r) for k in range(n + 1))
    return BellTildePolynomial(n, r, IntPolynomial(coeffs))


def bell_tilde(n: int, r) -> BellTildePolynomial:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _bell_tilde(n, as_restriction(r))


@lru_cache(maxsize=None)
def r_bell_poly(n: int, r: int) -> IntPolynomial:
    """Single-parameter r-Bell polynomial sum_k {n + r, k + r}_r z**k, r >= 0.

    r = 0 gives the classical Bell polynomial sum_k {n, k} z**k; for r >= 1
    this coincides with ``bell_poly(n, (r,))``.
    """
    if n < 0 or r < 0:
        raise ValueError(f"n and r must be nonnegative, got n={n}, r={r}")
    return IntPolynomial(tuple(r_stirling2(n + r, k + r, r) for k in range(n + 1)))


def verify_dobinski(n: int, r, order: int) -> VerificationReport:
    """Check B_n(z; r) = exp(-z) sum_k P_n(k; r) z**k / k! as a series in z."""
    r = as_restriction(r)
    b = bell_poly(n, r)
    if order < b.poly.degree + 1:
        raise ValueError(f"order must be >= {b.poly.degree + 1}, got {order}")
    P = poly_P(n, r)
    weighted = TruncatedSeries(
        tuple(Fraction(P(k), factorial(k)) for k in range(order + 1)), order
    )
    expanded = weighted * series_exp(TruncatedSeries.variable(order, -1))
    params = {"n": n, "r": r.parts, "order": order}
    return compare_series(
        IdentityId.Dobinski, params, expanded, TruncatedSeries(b.coeffs, order), var="z"
    )
