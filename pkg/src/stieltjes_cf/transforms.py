"""Binomial transform of moment sequences and the matching J-fraction shift."""

from __future__ import annotations

from fractions import Fraction

from .cfrac import JCoefficients, MomentSequence
from .series import RatLike, rat


def binomial_transform(a: MomentSequence, xi: RatLike) -> MomentSequence:
    """b_n = sum_k C(n,k) a_k xi^(n-k); translates a representing measure by xi."""
    xi = rat(xi)
    ms = a.moments
    powers = [Fraction(1)]
    for _ in range(len(ms)):
        powers.append(powers[-1] * xi)
    out = []
    row = [1]
    for n in range(len(ms)):
        if n:
            row = [1] + [row[k - 1] + row[k] for k in range(1, n)] + [1]
        out.append(sum(row[k] * ms[k] * powers[n - k] for k in range(n + 1)))
    return MomentSequence(tuple(out))


def j_shift(j: JCoefficients, xi: RatLike) -> JCoefficients:
    xi = rat(xi)
    return JCoefficients(tuple(g + xi for g in j.gammas), j.betas)
