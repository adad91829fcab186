"""Executable checks of the recurrences, basis changes and generating functions
satisfied by the (r_1, ..., r_p)-Bell polynomials.

Every ``verify_*`` function builds both sides independently and compares them
exactly, returning :class:`VerificationReport` objects rather than raising.
Functions covering several related identities return a list of reports.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Iterator, List, Sequence

from .bell import bell_poly, bell_tilde, r_bell_poly, verify_dobinski
from .exact_arith import (
    IntPolynomial,
    TruncatedSeries,
    poly_compose_series,
    series_exp,
)
from .report import (
    IdentityId,
    VerificationReport,
    compare_polys,
    compare_series,
    compare_values,
)
from .rp_stirling import (
    RestrictionVector,
    a_coeffs,
    as_restriction,
    restriction_grid,
    rp_stirling2,
)
from .stirling_core import r_stirling1_unsigned, r_stirling2

__all__ = [
    "GridConfig",
    "verify_t3",
    "verify_c1",
    "verify_t4",
    "verify_t6",
    "verify_spivey",
    "verify_carlitz",
    "verify_ogf_r",
    "verify_ogf_rp",
    "verify_ogf_tilde",
    "verify_eq2_eq8",
    "verify_cor_t6",
    "cor_t6_convolution_sides",
    "verify_dobinski",
    "run_suite",
    "SUITES",
]


def _B(n: int, r: RestrictionVector) -> IntPolynomial:
    return bell_poly(n, r).poly


def _exp_product_rule(q: IntPolynomial, times: int) -> IntPolynomial:
    """Polynomial Q_j with d^j/dz^j (e^z Q) = e^z Q_j."""
    for _ in range(times):
        q = q + q.derivative()
    return q


# -- basis change and reduction -------------------------------------------

def verify_t3(n: int, r, q: int = 0) -> VerificationReport:
    """B_n(z; r_1..r_{p+q}) = sum_k a_k(r_1..r_{p-1}) B_{n+k}(z; r_p..r_{p+q}).

    With ``q = 0`` the suffix is the single part r_p.
    """
    r = as_restriction(r)
    split = r.p - q  # 1-based index of the part that starts the suffix
    if q < 0 or split < 1:
        raise ValueError(f"q must be in 0..{r.p - 1}, got {q}")
    head, tail = r.parts[: split - 1], RestrictionVector(r.parts[split - 1:])
    rhs = IntPolynomial()
    for k, a in enumerate(a_coeffs(head)):
        if a:
            rhs = rhs + a * _B(n + k, tail)
    ident = IdentityId.T3a if q == 0 else IdentityId.T3b
    return compare_polys(ident, {"n": n, "r": r.parts, "q": q}, _B(n, r), rhs)


def verify_c1(n: int, k: int, r) -> VerificationReport:
    """{n+|r|, k+r_p}_r = sum_j {n+j+r_p, k+r_p}_{r_p} a_j(r_{p-1})."""
    r = as_restriction(r)
    lhs = rp_stirling2(n + r.total, k + r.last, r)
    rhs = sum(
        r_stirling2(n + j + r.last, k + r.last, r.last) * a
        for j, a in enumerate(a_coeffs(r.prefix))
    )
    return compare_values(IdentityId.C1, {"n": n, "k": k, "r": r.parts}, lhs, rhs)


# -- exponential generating function ---------------------------------------

def _egf_kernel(z: Fraction, rp: int, order: int) -> TruncatedSeries:
    """exp(z(e^t - 1) + r_p t) to the given order."""
    et = TruncatedSeries.exp_t(order)
    exponent = (et - 1) * z + TruncatedSeries.variable(order, rp)
    return series_exp(exponent)


def verify_t4(m: int, r, z, order: int) -> List[VerificationReport]:
    """Two closed forms of sum_n B_{n+m}(z; r) t^n / n! at a fixed rational z."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    r = as_restriction(r)
    z = Fraction(z)
    params = {"m": m, "r": r.parts, "z": z, "order": order}

    fact, lhs_coeffs = 1, []
    for n in range(order + 1):
        if n:
            fact *= n
        lhs_coeffs.append(Fraction(_B(n + m, r)(z)) / fact)
    lhs = TruncatedSeries(tuple(lhs_coeffs), order)

    z_et = TruncatedSeries.exp_t(order) * z
    rhs1 = poly_compose_series(_B(m, r), z_et) * _egf_kernel(z, r.last, order)

    a = a_coeffs(r.prefix)
    wide = _egf_kernel(z, r.last, order + m + len(a) - 1)
    derivs = [wide]
    for _ in range(m + len(a) - 1):
        derivs.append(derivs[-1].derivative())
    rhs2 = TruncatedSeries.constant(0, order)
    for k, ak in enumerate(a):
        if ak:
            rhs2 = rhs2 + derivs[m + k].truncate(order) * ak

    return [
        compare_series(IdentityId.T4a, params, lhs, rhs1),
        compare_series(IdentityId.T4b, params, lhs, rhs2),
    ]


# -- generalized recurrences ------------------------------------------------

def verify_t6(n: int, m: int, r) -> List[VerificationReport]:
    r = as_restriction(r)
    params = {"n": n, "m": m, "r": r.parts}
    rp = r.last
    lhs = _B(n + m, r)

    # (a) family z^j B_m(z; r + j e_p)
    rhs_a = IntPolynomial()
    for j in range(n + 1):
        s = r_stirling2(n + rp, j + rp, rp)
        if s:
            rhs_a = rhs_a + s * _B(m, r.increment_last(j)).shift(j)

    # (b) family z^j B_{m+i}(z; r_p + j)
    a = a_coeffs(r.prefix)
    rhs_b = IntPolynomial()
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(n + 1):
            s = r_stirling2(n + rp, j + rp, rp)
            if s:
                rhs_b = rhs_b + (s * ai) * _B(m + i, RestrictionVector((rp + j,))).shift(j)

    # (c) z^n B_m(z; r + n e_p) via first-kind coefficients
    lhs_c = _B(m, r.increment_last(n)).shift(n)
    rhs_c = IntPolynomial()
    for j in range(n + 1):
        c = r_stirling1_unsigned(n + rp, j + rp, rp)
        if c:
            rhs_c = rhs_c + ((-1) ** (n - j) * c) * _B(m + j, r)

    return [
        compare_polys(IdentityId.T6a, params, lhs, rhs_a),
        compare_polys(IdentityId.T6b, params, lhs, rhs_b),
        compare_polys(IdentityId.T6c, params, lhs_c, rhs_c),
    ]


def verify_cor_t6(n: int, m: int, k: int, r) -> List[VerificationReport]:
    """Stirling-number consequences of the generalized recurrences.

    The vanishing identity is only stated for k < n and is omitted otherwise.
    """
    r = as_restriction(r)
    params = {"n": n, "m": m, "k": k, "r": r.parts}
    rp, tot = r.last, r.total

    conv = sum(
        rp_stirling2(m + tot, i + rp, r) * r_stirling2(n + rp, k - i + rp, rp)
        for i in range(k + 1)
    )
    reports = [
        compare_values(IdentityId.CorT6_1, params, conv, rp_stirling2(n + m + tot, k + rp, r))
    ]

    def alternating(block: int) -> int:
        return sum(
            rp_stirling2(m + j + tot, block, r)
            * r_stirling1_unsigned(n + rp, j + rp, rp)
            * (-1) ** (n - j)
            for j in range(n + 1)
        )

    shifted = rp_stirling2(m + tot + n, k + rp + n, r.increment_last(n))
    reports.append(compare_values(IdentityId.CorT6_2, params, alternating(k + n + rp), shifted))
    if k < n:
        reports.append(compare_values(IdentityId.CorT6_3, params, alternating(k + rp), 0))
    return reports


def cor_t6_convolution_sides(n: int, m: int, k: int, r) -> tuple[int, int]:
    """Coefficient of z^k read off the z^j B_m(z; r + j e_p) recurrence.

    Returns (sum_j {n+r_p, j+r_p}_{r_p} {m+|r|+j, k+r_p}_{r+j e_p}, {n+m+|r|, k+r_p}_r).
    Unlike the CorT6_1 convolution, each term keeps its own shifted vector.
    """
    r = as_restriction(r)
    rp, tot = r.last, r.total
    lhs = sum(
        r_stirling2(n + rp, j + rp, rp) * rp_stirling2(m + tot + j, k + rp, r.increment_last(j))
        for j in range(n + 1)
    )
    return lhs, rp_stirling2(n + m + tot, k + rp, r)


def verify_spivey(n: int, m: int, r: int) -> VerificationReport:
    """B_{n+m,r}(z) = sum_k sum_j {m+r, j+r}_r C(n,k) j^(n-k) z^j B_{k,r}(z).

    r = 0 is the classical Bell-polynomial form; 0**0 counts as 1.
    """
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    rhs = IntPolynomial()
    for j in range(m + 1):
        s = r_stirling2(m + r, j + r, r)
        if not s:
            continue
        inner = IntPolynomial()
        for k in range(n + 1):
            inner = inner + (comb(n, k) * j ** (n - k)) * r_bell_poly(k, r)
        rhs = rhs + s * inner.shift(j)
    ident = IdentityId.Spivey if r == 0 else IdentityId.SpiveyR
    return compare_polys(ident, {"n": n, "m": m, "r": r}, r_bell_poly(n + m, r), rhs)


def verify_carlitz(n: int, m: int, r: int, s: int) -> List[VerificationReport]:
    """Both Carlitz identities for the r-Bell numbers B_n(1; r), r >= 0."""
    if r < 0 or s < 0:
        raise ValueError(f"r and s must be nonnegative, got r={r}, s={s}")
    params = {"n": n, "m": m, "r": r, "s": s}

    def bell1(n_: int, r_: int) -> int:
        return r_bell_poly(n_, r_)(1)

    rhs1 = sum(r_stirling2(m + r, k + r, r) * bell1(n, k + r) for k in range(m + 1))
    rhs2 = sum(
        r_stirling1_unsigned(s + r, k + r, r) * (-1) ** (s - k) * bell1(n + k, r)
        for k in range(s + 1)
    )
    return [
        compare_values(IdentityId.Carlitz1, params, bell1(n + m, r), rhs1),
        compare_values(IdentityId.Carlitz2, params, bell1(n, r + s), rhs2),
    ]


# -- ordinary generating functions --------------------------------------------

def _inverse_linear_product(start: int, count: int, order: int) -> TruncatedSeries:
    """prod_{j=0}^{count-1} (1 - (start + j) t)^(-1)."""
    out = TruncatedSeries.constant(1, order)
    for j in range(count):
        out = out * TruncatedSeries.geometric(start + j, order)
    return out


def _cancelled_prefactor(prefix: Sequence[int], order: int) -> TruncatedSeries:
    """t^|prefix| prod_i (1/t)^(falling r_i) = prod_i prod_{l<r_i} (1 - l t)."""
    poly = IntPolynomial.constant(1)
    for ri in prefix:
        for l in range(ri):
            poly = poly * IntPolynomial((1, -l))
    return TruncatedSeries(poly.coeffs, order)


def verify_ogf_r(k: int, r: int, order: int) -> VerificationReport:
    """sum_{n>=k} {n+r, k+r}_r t^n = t^k prod_{j=0}^{k} (1 - (r+j) t)^(-1)."""
    if order < k:
        raise ValueError(f"order must be >= k, got order={order}, k={k}")
    lhs = TruncatedSeries(tuple(r_stirling2(n + r, k + r, r) for n in range(order + 1)), order)
    rhs = _inverse_linear_product(r, k + 1, order).shift(k)
    return compare_series(IdentityId.OGF_r, {"k": k, "r": r, "order": order}, lhs, rhs)


def verify_ogf_rp(k: int, r, order: int) -> VerificationReport:
    """Ordinary generating function of {n+|r|, k+|r|}_r in n."""
    r = as_restriction(r)
    if order < k:
        raise ValueError(f"order must be >= k, got order={order}, k={k}")
    lhs = TruncatedSeries(
        tuple(rp_stirling2(n + r.total, k + r.total, r) for n in range(order + 1)), order
    )
    rhs = (
        _cancelled_prefactor(r.prefix, order)
        * _inverse_linear_product(r.last, k + r.prefix_total + 1, order).shift(k)
    )
    return compare_series(IdentityId.OGF_rp, {"k": k, "r": r.parts, "order": order}, lhs, rhs)


def verify_ogf_tilde(z, r, order: int) -> VerificationReport:
    """sum_n Btilde_n(z; r) t^n against the closed sum over block offsets."""
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    r = as_restriction(r)
    z = Fraction(z)
    lhs = TruncatedSeries(tuple(Fraction(bell_tilde(n, r)(z)) for n in range(order + 1)), order)
    inner = TruncatedSeries.constant(0, order)
    for kk in range(order + 1):  # kk = k - |r_{p-1}|
        term = _inverse_linear_product(r.last, kk + r.prefix_total + 1, order).shift(kk)
        inner = inner + term * z**kk
    rhs = _cancelled_prefactor(r.prefix, order) * inner
    params = {"z": z, "r": r.parts, "order": order}
    return compare_series(IdentityId.OGF_tilde, params, lhs, rhs)


# -- derivative identities --------------------------------------------------------

def verify_eq2_eq8(n: int, m: int, j: int, r) -> List[VerificationReport]:
    """Derivative identities with the exp(z) factor handled by the product rule.

    Eq8: e^z B_m(z; r + j e_p) = d^j/dz^j (e^z B_m(z; r)).
    Eq2: B_n(z; r_1..r_{p+1}) = e^-z d^{r_{p+1}}/dz^{r_{p+1}} (z^{r_p} e^z B_n(z; r_1..r_p));
    checked only when r has at least two parts (the last part is the one appended).
    """
    if not 0 <= j <= 6:
        raise ValueError(f"j must be in 0..6, got {j}")
    r = as_restriction(r)
    reports = []
    if r.p >= 2:
        base = RestrictionVector(r.parts[:-1])
        built = _exp_product_rule(_B(n, base).shift(base.last), r.last)
        reports.append(compare_polys(IdentityId.Eq2, {"n": n, "r": r.parts}, _B(n, r), built))
    reports.append(
        compare_polys(
            IdentityId.Eq8,
            {"m": m, "j": j, "r": r.parts},
            _B(m, r.increment_last(j)),
            _exp_product_rule(_B(m, r), j),
        )
    )
    return reports


# -- suites ---------------------------------------------------------------------

T4_Z_VALUES = (Fraction(1), Fraction(1, 2), Fraction(2), Fraction(-1))


@dataclass(frozen=True)
class GridConfig:
    """Parameter ranges for a suite run."""

    max_n: int = 6
    max_m: int = 6
    max_r: int = 5
    max_parts: int = 3
    order: int | None = None
    t4_order: int = 8
    ogf_order: int = 12
    ogf_max_k: int = 3
    dobinski_margin: int = 10
    z_values: tuple = field(default=T4_Z_VALUES)

    def restrictions(self) -> list[RestrictionVector]:
        return restriction_grid(self.max_r, self.max_parts)


def _suite_t3(cfg: GridConfig) -> Iterator[VerificationReport]:
    for r in cfg.restrictions():
        for n in range(cfg.max_n + 1):
            for q in range(r.p):
                yield verify_t3(n, r, q)


def _suite_c1(cfg: GridConfig) -> Iterator[VerificationReport]:
    for r in cfg.restrictions():
        for n in range(cfg.max_n + 1):
            for k in range(n + r.prefix_total + 2):
                yield verify_c1(n, k, r)


def _suite_t4(cfg: GridConfig) -> Iterator[VerificationReport]:
    order = cfg.order if cfg.order is not None else cfg.t4_order
    for r in cfg.restrictions():
        for m in range(cfg.max_m + 1):
            for z in cfg.z_values:
                yield from verify_t4(m, r, z, order)


def _suite_t6(cfg: GridConfig) -> Iterator[VerificationReport]:
    for r in cfg.restrictions():
        for n in range(cfg.max_n + 1):
            for m in range(cfg.max_m + 1):
                yield from verify_t6(n, m, r)


def _suite_cor_t6(cfg: GridConfig) -> Iterator[VerificationReport]:
    for r in cfg.restrictions():
        for n in range(cfg.max_n + 1):
            for m in range(cfg.max_m + 1):
                for k in range(n + m + r.prefix_total + 1):
                    yield from verify_cor_t6(n, m, k, r)


def _suite_spivey(cfg: GridConfig) -> Iterator[VerificationReport]:
    for r in range(cfg.max_r + 1):
        for n in range(cfg.max_n + 1):
            for m in range(cfg.max_m + 1):
                yield verify_spivey(n, m, r)


def _suite_carlitz(cfg: GridConfig) -> Iterator[VerificationReport]:
    for r in range(cfg.max_r + 1):
        for n in range(cfg.max_n + 1):
            for m in range(cfg.max_m + 1):
                for s in range(cfg.max_m + 1):
                    yield from verify_carlitz(n, m, r, s)


def _suite_ogf(cfg: GridConfig) -> Iterator[VerificationReport]:
    order = cfg.order if cfg.order is not None else cfg.ogf_order
    max_k = min(cfg.ogf_max_k, order)
    for r in range(cfg.max_r + 1):
        for k in range(max_k + 1):
            yield verify_ogf_r(k, r, order)
    for r in cfg.restrictions():
        for k in range(max_k + 1):
            yield verify_ogf_rp(k, r, order)
        for z in cfg.z_values:
            yield verify_ogf_tilde(z, r, order)


def _suite_dobinski(cfg: GridConfig) -> Iterator[VerificationReport]:
    for r in cfg.restrictions():
        for n in range(cfg.max_n + 1):
            needed = n + r.prefix_total + 1
            order = cfg.order if cfg.order is not None else needed - 1 + cfg.dobinski_margin
            yield verify_dobinski(n, r, max(order, needed))


def _suite_eq2_eq8(cfg: GridConfig) -> Iterator[VerificationReport]:
    for r in cfg.restrictions():
        for n in range(cfg.max_n + 1):
            for j in range(min(cfg.max_m, 6) + 1):
                yield from verify_eq2_eq8(n, n, j, r)


SUITES: dict[str, Callable[[GridConfig], Iterator[VerificationReport]]] = {
    "t3": _suite_t3,
    "c1": _suite_c1,
    "t4": _suite_t4,
    "t6": _suite_t6,
    "cor-t6": _suite_cor_t6,
    "spivey": _suite_spivey,
    "carlitz": _suite_carlitz,
    "ogf": _suite_ogf,
    "dobinski": _suite_dobinski,
    "eq2-eq8": _suite_eq2_eq8,
}


def run_suite(name: str, cfg: GridConfig | None = None) -> list[VerificationReport]:
    """Run one named suite (or ``"all"``); reports come back sorted by identity and params."""
    cfg = cfg or GridConfig()
    names = list(SUITES) if name == "all" else [name]
    reports: list[VerificationReport] = []
    for nm in names:
        if nm not in SUITES:
            raise ValueError(f"unknown suite {nm!r}")
        reports.extend(SUITES[nm](cfg))
    return sorted(reports, key=VerificationReport.sort_key)
