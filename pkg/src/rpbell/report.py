"""Structured pass/fail records produced by the identity checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Optional, Sequence

from .exact_arith import IntPolynomial, TruncatedSeries, format_rational


class IdentityId(str, Enum):
    T3a = "T3a"
    T3b = "T3b"
    C1 = "C1"
    T4a = "T4a"
    T4b = "T4b"
    T6a = "T6a"
    T6b = "T6b"
    T6c = "T6c"
    CorT6_1 = "CorT6_1"
    CorT6_2 = "CorT6_2"
    CorT6_3 = "CorT6_3"
    Spivey = "Spivey"
    SpiveyR = "SpiveyR"
    Carlitz1 = "Carlitz1"
    Carlitz2 = "Carlitz2"
    OGF_r = "OGF_r"
    OGF_rp = "OGF_rp"
    OGF_tilde = "OGF_tilde"
    Dobinski = "Dobinski"
    Eq2 = "Eq2"
    Eq8 = "Eq8"


@dataclass(frozen=True)
class Discrepancy:
    location: str
    lhs: Any
    rhs: Any


@dataclass(frozen=True)
class VerificationReport:
    identity_id: IdentityId
    params: dict = field(default_factory=dict)
    passed: bool = True
    first_discrepancy: Optional[Discrepancy] = None

    def __post_init__(self):
        if self.passed != (self.first_discrepancy is None):
            raise ValueError("passed must be True exactly when there is no discrepancy")

    def to_dict(self) -> dict:
        disc = None
        if self.first_discrepancy is not None:
            d = self.first_discrepancy
            disc = {"location": d.location, "lhs": _ser(d.lhs), "rhs": _ser(d.rhs)}
        return {
            "identity_id": self.identity_id.value,
            "params": {k: _ser(v) for k, v in self.params.items()},
            "passed": self.passed,
            "first_discrepancy": disc,
        }

    def sort_key(self) -> tuple:
        return (self.identity_id.value, format_params(self.params))


def _ser(value: Any) -> Any:
    """JSON-safe form: integers and rationals become strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, IntPolynomial):
        return [str(c) for c in value.coeffs]
    if isinstance(value, (list, tuple)):
        return [_ser(v) for v in value]
    return str(value)


def format_params(params: dict) -> str:
    items = []
    for k in sorted(params):
        v = params[k]
        if isinstance(v, (list, tuple)):
            v = "(" + ",".join(str(x) for x in v) + ")"
        elif isinstance(v, Fraction):
            v = format_rational(v)
        items.append(f"{k}={v}")
    return " ".join(items)


def _first_diff(a: Sequence, b: Sequence, var: str):
    n = max(len(a), len(b))
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        if x != y:
            return Discrepancy(f"{var}^{i}", x, y)
    return None


def compare_polys(identity: IdentityId, params: dict, lhs: IntPolynomial,
                  rhs: IntPolynomial) -> VerificationReport:
    disc = _first_diff(lhs.coeffs, rhs.coeffs, "z")
    return VerificationReport(identity, params, disc is None, disc)


def compare_series(identity: IdentityId, params: dict, lhs: TruncatedSeries,
                   rhs: TruncatedSeries, var: str = "t") -> VerificationReport:
    order = min(lhs.order, rhs.order)
    disc = _first_diff(lhs.coeffs[: order + 1], rhs.coeffs[: order + 1], var)
    return VerificationReport(identity, params, disc is None, disc)


def compare_values(identity: IdentityId, params: dict, lhs, rhs,
                   location: str = "value") -> VerificationReport:
    disc = None if lhs == rhs else Discrepancy(location, lhs, rhs)
    return VerificationReport(identity, params, disc is None, disc)
