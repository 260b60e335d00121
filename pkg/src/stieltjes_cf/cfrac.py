"""S-fraction and J-fraction coefficient algebra on exact truncated series.

S-fraction:  c / (1 - a1 t / (1 - a2 t / (1 - ...)))
J-fraction:  1 / (1 - g0 t - b1 t^2 / (1 - g1 t - b2 t^2 / (1 - ...)))

Coefficients past the stored lists are taken to be zero, i.e. stored
fractions are finite.  Expansion is bottom-up and only descends as deep
as can influence the requested order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .series import (
    RatLike,
    TruncatedSeries,
    rat,
    rat_str,
    series_reciprocal,
    series_scale,
)


class NotSFracRepresentable(ValueError):
    """No standard S-fraction reproduces the given moments.

    ``index`` is the position where extraction broke down: 0 for a bad
    constant term, otherwise the S-fraction level whose residual was
    inconsistent.
    """

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class MomentSequence:
    moments: tuple

    def __post_init__(self):
        ms = tuple(rat(m) for m in self.moments)
        if not ms:
            raise ValueError("a moment sequence needs at least a_0")
        object.__setattr__(self, "moments", ms)

    @classmethod
    def of(cls, values: Iterable[RatLike]) -> MomentSequence:
        return cls(tuple(values))

    @property
    def order(self) -> int:
        return len(self.moments) - 1

    def __len__(self) -> int:
        return len(self.moments)

    def __getitem__(self, n):
        return self.moments[n]

    def as_series(self) -> TruncatedSeries:
        return TruncatedSeries(self.moments)

    def prefix(self, length: int) -> MomentSequence:
        return MomentSequence(self.moments[:length])

    def to_dict(self) -> dict:
        return {"moments": [rat_str(m) for m in self.moments]}

    @classmethod
    def from_dict(cls, d) -> MomentSequence:
        if isinstance(d, list):
            return cls(tuple(d))
        return cls(tuple(d["moments"]))


@dataclass(frozen=True)
class SCoefficients:
    c: Fraction
    alphas: tuple = ()
    terminated: bool = False

    def __post_init__(self):
        c = rat(self.c)
        alphas = tuple(rat(a) for a in self.alphas)
        if c < 0:
            raise ValueError("leading constant c must be nonnegative")
        if c == 0 and alphas:
            raise ValueError("c = 0 forces an empty coefficient list")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "terminated", bool(self.terminated))

    def alpha(self, i: int) -> Fraction:
        """1-based access; entries beyond the list read as zero."""
        if 1 <= i <= len(self.alphas):
            return self.alphas[i - 1]
        return Fraction(0)

    def is_standard(self) -> bool:
        # a zero entry must be followed only by zeros and mark termination
        for k, a in enumerate(self.alphas):
            if a == 0:
                return self.terminated and not any(self.alphas[k:])
        return True

    def stripped(self) -> tuple:
        """Coefficients with trailing zeros removed."""
        alphas = list(self.alphas)
        while alphas and alphas[-1] == 0:
            alphas.pop()
        return tuple(alphas)

    def to_dict(self) -> dict:
        return {
            "c": rat_str(self.c),
            "alphas": [rat_str(a) for a in self.alphas],
            "terminated": self.terminated,
        }

    @classmethod
    def from_dict(cls, d: dict) -> SCoefficients:
        return cls(d["c"], tuple(d.get("alphas", ())), bool(d.get("terminated", False)))


@dataclass(frozen=True)
class JCoefficients:
    gammas: tuple
    betas: tuple = ()

    def __post_init__(self):
        gammas = tuple(rat(g) for g in self.gammas)
        betas = tuple(rat(b) for b in self.betas)
        if not gammas:
            raise ValueError("a J-fraction needs at least gamma_0")
        if len(betas) != len(gammas) - 1:
            raise ValueError("need exactly one beta per gamma beyond gamma_0")
        object.__setattr__(self, "gammas", gammas)
        object.__setattr__(self, "betas", betas)

    def to_dict(self) -> dict:
        return {
            "gammas": [rat_str(g) for g in self.gammas],
            "betas": [rat_str(b) for b in self.betas],
        }

    @classmethod
    def from_dict(cls, d: dict) -> JCoefficients:
        return cls(tuple(d["gammas"]), tuple(d.get("betas", ())))


def s_expand(s: SCoefficients, order: int) -> TruncatedSeries:
    """Power series of the S-fraction through t^order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if s.c == 0:
        return TruncatedSeries.zero(order)
    one = TruncatedSeries.one(order)
    # level k first touches the t^k coefficient
    depth = min(len(s.alphas), order)
    tail = one
    for alpha in reversed(s.alphas[:depth]):
        tail = series_reciprocal(one - series_scale(alpha, tail.shift_up()))
    return series_scale(s.c, tail)


def s_extract(a: MomentSequence) -> SCoefficients:
    """Standard S-fraction coefficients reproducing a_0..a_N.

    Repeatedly writes f_k = 1 / (1 - alpha_{k+1} t f_{k+1}); each level
    consumes one order, so at most N coefficients come out.  Negative
    coefficients are returned as-is.
    """
    ms = a.moments
    a0 = ms[0]
    if a0 < 0:
        raise NotSFracRepresentable("a_0 is negative", index=0)
    if a0 == 0:
        for n, m in enumerate(ms):
            if m != 0:
                raise NotSFracRepresentable(
                    f"a_0 = 0 but a_{n} = {m} is nonzero", index=n
                )
        return SCoefficients(Fraction(0), (), True)

    f = series_scale(1 / a0, a.as_series())
    one = TruncatedSeries.one(f.order)
    alphas = []
    while f.order >= 1:
        r = one.truncate(f.order) - series_reciprocal(f)
        alpha = r[1]
        if alpha == 0:
            if not r.is_zero():
                level = len(alphas) + 1
                raise NotSFracRepresentable(
                    f"alpha_{level} = 0 but the residual series is nonzero",
                    index=level,
                )
            return SCoefficients(a0, tuple(alphas), True)
        alphas.append(alpha)
        f = series_scale(1 / alpha, r.shift_down())
    return SCoefficients(a0, tuple(alphas), False)


def contract(s: SCoefficients) -> JCoefficients:
    """Even contraction of an S-fraction into a J-fraction.

    gamma_0 = a1, gamma_n = a_{2n} + a_{2n+1}, beta_n = a_{2n-1} a_{2n}.
    """
    M = len(s.alphas)
    m = M // 2
    al = s.alpha
    gammas = [al(1)] + [al(2 * n) + al(2 * n + 1) for n in range(1, m + 1)]
    betas = [al(2 * n - 1) * al(2 * n) for n in range(1, m + 1)]
    return JCoefficients(tuple(gammas), tuple(betas))


def j_expand(j: JCoefficients, c: RatLike, order: int) -> TruncatedSeries:
    """Power series of ``c`` times the J-fraction through t^order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    c = rat(c)
    one = TruncatedSeries.one(order)
    t = TruncatedSeries.monomial(1, order)
    m = len(j.gammas) - 1
    # beta_k t^2 first touches t^{2k}; deeper levels are invisible
    top = min(m, (order + 1) // 2)
    tail: Optional[TruncatedSeries] = None
    for k in range(top, -1, -1):
        denom = one - series_scale(j.gammas[k], t)
        if tail is not None:
            denom = denom - series_scale(j.betas[k], tail.shift_up().shift_up())
        tail = series_reciprocal(denom)
    return series_scale(c, tail)
