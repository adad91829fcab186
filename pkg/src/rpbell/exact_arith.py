"""Exact integer polynomials and truncated power series over the rationals.

Scalars are plain Python ``int`` (arbitrary precision) and
``fractions.Fraction`` (always in lowest terms, positive denominator).
Nothing in this module touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def format_int(value: int) -> str:
    """Decimal-string serialization used by the CLI envelope."""
    return str(int(value))


def format_rational(value: Scalar) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; raises ``ValueError`` on malformed input."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def _trim(coeffs: Iterable) -> tuple:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense univariate polynomial with integer coefficients, lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        trimmed = _trim(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", trimmed)

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls((0,) * k + (c,))

    @classmethod
    def z(cls) -> IntPolynomial:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return self + (-other)

    def __mul__(self, other) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPolynomial.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by z**k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def __call__(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    if a.is_zero() or b.is_zero():
        return IntPolynomial()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return IntPolynomial(tuple(out))


def falling_factorial_poly(shift: int, r: int) -> IntPolynomial:
    """(z + shift)(z + shift - 1) ... (z + shift - r + 1)."""
    if r < 0:
        raise ValueError(f"falling factorial length must be >= 0, got {r}")
    result = IntPolynomial.constant(1)
    for i in range(r):
        result = result * IntPolynomial((shift - i, 1))
    return result


def rising_factorial_poly(shift: int, r: int) -> IntPolynomial:
    """(z + shift)(z + shift + 1) ... (z + shift + r - 1)."""
    if r < 0:
        raise ValueError(f"rising factorial length must be >= 0, got {r}")
    result = IntPolynomial.constant(1)
    for i in range(r):
        result = result * IntPolynomial((shift + i, 1))
    return result


@lru_cache(maxsize=None)
def _stirling2_row(m: int) -> tuple[int, ...]:
    # local import: stirling_core depends on nothing here, but keep the
    # module graph acyclic at import time
    from .stirling_core import stirling2

    return tuple(stirling2(m, k) for k in range(m + 1))


def to_falling_basis(p: IntPolynomial) -> tuple[int, ...]:
    """Coefficients c_k with p(z) = sum_k c_k z(z-1)...(z-k+1).

    Uses z**m = sum_k S2(m, k) z^(falling k).
    """
    if p.is_zero():
        return (0,)
    out = [0] * len(p.coeffs)
    for m, c in enumerate(p.coeffs):
        if c == 0:
            continue
        for k, s in enumerate(_stirling2_row(m)):
            out[k] += c * s
    return tuple(out)


def from_falling_basis(coeffs: Sequence[int]) -> IntPolynomial:
    result = IntPolynomial()
    for k, c in enumerate(coeffs):
        if c:
            result = result + c * falling_factorial_poly(0, k)
    return result


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series known exactly through ``t**order``.

    Coefficients beyond ``order`` are unknown, not zero; binary operations
    keep the smaller of the two orders.
    """

    coeffs: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be >= 0, got {self.order}")
        cs = [Fraction(c) for c in self.coeffs[: self.order + 1]]
        cs.extend([Fraction(0)] * (self.order + 1 - len(cs)))
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c: Scalar, order: int) -> TruncatedSeries:
        return cls((Fraction(c),), order)

    @classmethod
    def variable(cls, order: int, scale: Scalar = 1) -> TruncatedSeries:
        """The series ``scale * t``."""
        return cls((Fraction(0), Fraction(scale)), order)

    @classmethod
    def exp_t(cls, order: int) -> TruncatedSeries:
        """exp(t) = sum t**n / n!."""
        cs, fact = [], 1
        for n in range(order + 1):
            if n:
                fact *= n
            cs.append(Fraction(1, fact))
        return cls(tuple(cs), order)

    @classmethod
    def geometric(cls, a: Scalar, order: int) -> TruncatedSeries:
        """1 / (1 - a t)."""
        a = Fraction(a)
        return cls(tuple(a**n for n in range(order + 1)), order)

    def __getitem__(self, n: int) -> Fraction:
        if n > self.order:
            raise IndexError(f"coefficient t^{n} is beyond the known order {self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def __add__(self, other) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.constant(other, self.order)
        order = min(self.order, other.order)
        return TruncatedSeries(
            tuple(self.coeffs[i] + other.coeffs[i] for i in range(order + 1)), order
        )

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other) -> TruncatedSeries:
        return self + (-other)

    def __rsub__(self, other) -> TruncatedSeries:
        return (-self) + other

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        other = Fraction(other)
        return TruncatedSeries(tuple(c * other for c in self.coeffs), self.order)

    __rmul__ = __mul__

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by t**k; the known order is unchanged."""
        return TruncatedSeries((Fraction(0),) * k + self.coeffs, self.order)

    def derivative(self) -> TruncatedSeries:
        """d/dt; the result is known one order lower."""
        if self.order == 0:
            raise ValueError("derivative of an order-0 series carries no information")
        return TruncatedSeries(
            tuple(n * self.coeffs[n] for n in range(1, self.order + 1)), self.order - 1
        )

    def inverse(self) -> TruncatedSeries:
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        out = [1 / c0]
        for n in range(1, self.order + 1):
            acc = sum(self.coeffs[k] * out[n - k] for k in range(1, n + 1))
            out.append(-acc / c0)
        return TruncatedSeries(tuple(out), self.order)

    def __repr__(self) -> str:
        body = ", ".join(format_rational(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}], order={self.order})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    order = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for n in range(order + 1):
        out.append(sum((ac[i] * bc[n - i] for i in range(n + 1)), Fraction(0)))
    return TruncatedSeries(tuple(out), order)


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp(s) for a series with zero constant term.

    From E' = s' E:  n e_n = sum_{k=1}^{n} k s_k e_{n-k}.
    """
    if s.coeffs[0] != 0:
        raise ValueError("series_exp needs a zero constant term")
    e = [Fraction(1)]
    for n in range(1, s.order + 1):
        acc = sum((k * s.coeffs[k] * e[n - k] for k in range(1, n + 1)), Fraction(0))
        e.append(acc / n)
    return TruncatedSeries(tuple(e), s.order)


def poly_compose_series(p: IntPolynomial, s: TruncatedSeries) -> TruncatedSeries:
    """p(s) by Horner's rule, known to the order of ``s``."""
    acc = TruncatedSeries.constant(0, s.order)
    for c in reversed(p.coeffs):
        acc = acc * s + c
    return acc
