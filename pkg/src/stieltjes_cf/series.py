"""Exact truncated formal power series over the rationals.

A series carries its truncation order explicitly.  Binary operations
truncate to the shorter operand, so no result ever claims more
precision than its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

RatLike = Union[Fraction, int, str]


class ZeroConstantTerm(ZeroDivisionError):
    """Raised when inverting a series whose constant term is zero."""


def rat(x: RatLike) -> Fraction:
    """Coerce ``x`` to an exact rational.  Floats are rejected."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact/boolean value {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def rat_str(x: Fraction) -> str:
    # Fraction.__str__ already gives "p/q" or "p" in lowest terms
    return str(x)


@dataclass(frozen=True, init=False)
class TruncatedSeries:
    coeffs: tuple

    def __init__(self, coeffs: Iterable[RatLike]):
        cs = tuple(rat(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([1] + [0] * order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: RatLike = 1) -> TruncatedSeries:
        cs = [Fraction(0)] * (order + 1)
        if power <= order:
            cs[power] = rat(coeff)
        return cls(cs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1])

    def shift_up(self) -> TruncatedSeries:
        """Multiply by t, keeping the same order."""
        return TruncatedSeries((Fraction(0),) + self.coeffs[:-1])

    def shift_down(self) -> TruncatedSeries:
        """Divide by t; the constant term must vanish.  Order drops by one."""
        if self.coeffs[0] != 0:
            raise ValueError("constant term must be zero to divide by t")
        if self.order == 0:
            raise ValueError("no coefficients left after division by t")
        return TruncatedSeries(self.coeffs[1:])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_add(self, other)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_sub(self, other)

    def __neg__(self) -> TruncatedSeries:
        return series_scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return series_scale(other, self)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return "TruncatedSeries([" + ", ".join(rat_str(c) for c in self.coeffs) + "])"

    def to_list(self) -> list:
        return [rat_str(c) for c in self.coeffs]

    @classmethod
    def from_list(cls, items) -> TruncatedSeries:
        return cls(items)


def series_add(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    n = min(f.order, g.order)
    return TruncatedSeries(f.coeffs[k] + g.coeffs[k] for k in range(n + 1))


def series_sub(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    n = min(f.order, g.order)
    return TruncatedSeries(f.coeffs[k] - g.coeffs[k] for k in range(n + 1))


def series_scale(c: RatLike, f: TruncatedSeries) -> TruncatedSeries:
    c = rat(c)
    return TruncatedSeries(c * x for x in f.coeffs)


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to ``min(f.order, g.order)``."""
    n = min(f.order, g.order)
    a, b = f.coeffs, g.coeffs
    out = []
    for k in range(n + 1):
        s = Fraction(0)
        for i in range(k + 1):
            if a[i] and b[k - i]:
                s += a[i] * b[k - i]
        out.append(s)
    return TruncatedSeries(out)


def series_reciprocal(f: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of ``f`` to the same order.

    Uses b_0 = 1/a_0, b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}.
    """
    a = f.coeffs
    if a[0] == 0:
        raise ZeroConstantTerm("series has zero constant term")
    inv0 = 1 / a[0]
    b = [inv0]
    for n in range(1, f.order + 1):
        s = Fraction(0)
        for k in range(1, n + 1):
            if a[k]:
                s += a[k] * b[n - k]
        b.append(-inv0 * s)
    return TruncatedSeries(b)
