"""Exact certificates for real-rootedness, log-concavity and the modal index.

Sturm chains are built over ``Fraction`` on the square-free part of the
input, so a positive certificate is a proof rather than a numerical estimate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .bell import bell_poly
from .exact_arith import IntPolynomial
from .rp_stirling import RestrictionVector, as_restriction

RatPoly = List[Fraction]  # lowest degree first, no trailing zeros


@dataclass(frozen=True)
class RootCertificate:
    degree: int
    distinct_real_negative_roots: int
    squarefree_degree: int
    all_real_negative: bool


@dataclass(frozen=True)
class MaxIndexReport:
    n: int
    r: RestrictionVector
    K: int
    darroch_center: Fraction
    within_one: bool
    boundary: bool  # |K - center| == 1 exactly


def _trim(p: RatPoly) -> RatPoly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _rem(a: RatPoly, b: RatPoly) -> RatPoly:
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        q = a[-1] / lead
        shift = len(a) - 1 - db
        for i, c in enumerate(b):
            a[shift + i] -= q * c
        _trim(a)
    return a


def _quo(a: RatPoly, b: RatPoly) -> RatPoly:
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    out = [Fraction(0)] * max(len(a) - db, 1)
    while a and len(a) - 1 >= db:
        q = a[-1] / lead
        shift = len(a) - 1 - db
        out[shift] = q
        for i, c in enumerate(b):
            a[shift + i] -= q * c
        _trim(a)
    return _trim(out)


def _monic(p: RatPoly) -> RatPoly:
    lead = p[-1]
    return [c / lead for c in p]


def _gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    while b:
        a, b = b, _rem(a, b)
    return _monic(a)


def _deriv(p: RatPoly) -> RatPoly:
    return _trim([i * c for i, c in enumerate(p)][1:])


def _eval(p: RatPoly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def squarefree_part(p: IntPolynomial) -> RatPoly:
    f = [Fraction(c) for c in p.coeffs]
    if len(f) <= 1:
        return _monic(f)
    return _monic(_quo(f, _gcd(f, _deriv(f))))


def sturm_chain(f: RatPoly) -> list[RatPoly]:
    """f, f', -rem(...), ...; every member scaled by a positive constant."""
    chain = [f]
    d = _deriv(f)
    while d:
        chain.append([c / abs(d[-1]) for c in d])
        d = [-c for c in _rem(chain[-2], chain[-1])]
    return chain


def _sign_changes(chain: Sequence[RatPoly], x: Fraction) -> int:
    signs = [v > 0 for v in (_eval(p, x) for p in chain) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_bound(f: RatPoly) -> Fraction:
    lead = abs(f[-1])
    return 1 + max((abs(c) / lead for c in f[:-1]), default=Fraction(0))


def count_real_roots(p: IntPolynomial, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in the half-open interval (lo, hi]."""
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    chain = sturm_chain(squarefree_part(p))
    return _sign_changes(chain, Fraction(lo)) - _sign_changes(chain, Fraction(hi))


def certify_real_negative_roots(p: IntPolynomial) -> RootCertificate:
    """Sturm count of distinct roots in (-B, 0) against the square-free degree."""
    if p.is_zero():
        raise ValueError("cannot certify the roots of the zero polynomial")
    f = squarefree_part(p)
    sqf_degree = len(f) - 1
    zero_root = f[0] == 0
    g = f[1:] if zero_root else f  # square-free, so 0 is at most a simple root
    if len(g) <= 1:
        negative = 0
    else:
        chain = sturm_chain(g)
        negative = _sign_changes(chain, -cauchy_bound(g)) - _sign_changes(chain, Fraction(0))
    return RootCertificate(
        degree=p.degree,
        distinct_real_negative_roots=negative,
        squarefree_degree=sqf_degree,
        all_real_negative=(not zero_root and negative == sqf_degree),
    )


def check_newton_inequality(coeffs: Sequence[int]) -> bool:
    """a_i^2 >= (1 + 1/i)(1 + 1/(n-i)) a_{i+1} a_{i-1} for 1 <= i <= n-1."""
    if len(coeffs) < 3:
        raise ValueError("Newton's inequality needs at least three coefficients")
    n = len(coeffs) - 1
    for i in range(1, n):
        bound = (1 + Fraction(1, i)) * (1 + Fraction(1, n - i)) * coeffs[i + 1] * coeffs[i - 1]
        if coeffs[i] ** 2 < bound:
            return False
    return True


def check_strong_log_concavity(coeffs: Sequence[int]) -> bool:
    """Strict a_i^2 > a_{i-1} a_{i+1} wherever both neighbours are positive."""
    if any(c < 0 for c in coeffs):
        raise ValueError("log-concavity check expects a nonnegative sequence")
    for i in range(1, len(coeffs) - 1):
        outer = coeffs[i - 1] * coeffs[i + 1]
        if outer > 0 and coeffs[i] ** 2 <= outer:
            return False
    return True


def greatest_argmax(values: Sequence[int]) -> int:
    best = max(values)
    return max(i for i, v in enumerate(values) if v == best)


def max_index_report(n: int, r) -> MaxIndexReport:
    r = as_restriction(r)
    row = bell_poly(n, r).coeffs
    K = greatest_argmax(row)
    center = Fraction(bell_poly(n + 1, r)(1), bell_poly(n, r)(1)) - (r.last + 1)
    gap = abs(K - center)
    return MaxIndexReport(n, r, K, center, gap < 1, gap == 1)
