"""Support certification for moment prefixes.

Two families of certificates live here:

* support in ``[xi, inf)``: the S-fraction coefficients are written as

      alpha_{2k-1} = xi (1 + g_{2k-2}) + g_{2k-1}
      alpha_{2k}   = g_{2k-1} g_{2k} / (1 + g_{2k-2})

  and a nonnegative ``g`` (with ``g_0 = 0``) certifies the support;

* support in ``[0, xi]``: ``alpha_n = xi (1 - g_{n-1}) g_n`` with every
  ``g_n`` in ``[0, 1]``.

Every verdict concerns the finite prefix that was supplied.  A
nonnegative ``g`` prefix always extends by zeros, so a certified prefix
is the prefix of some measure with the requested support.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .cfrac import MomentSequence, NotSFracRepresentable, SCoefficients, s_extract
from .series import RatLike, rat, rat_str
from .transforms import binomial_transform


class NegativeG(ValueError):
    pass


class NonStandardInput(ValueError):
    pass


class RouteMismatch(AssertionError):
    """The two independent g computations disagree.  Always a bug."""


class InfeasibleBase(ValueError):
    pass


class Status(str, enum.Enum):
    CERTIFIED = "CertifiedPrefix"
    REFUTED = "Refuted"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True)
class GSequence:
    g: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "g", tuple(rat(x) for x in self.g))

    def __len__(self) -> int:
        return len(self.g)

    def __getitem__(self, i):
        return self.g[i]

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.g)

    def to_list(self) -> list:
        return [rat_str(x) for x in self.g]


@dataclass(frozen=True)
class CertVerdict:
    status: Status
    witness: Optional[GSequence] = None
    refutation_index: Optional[int] = None
    detail: str = ""
    # g values computed up to and including the violation (Refuted only)
    partial: GSequence = field(default_factory=GSequence)

    @property
    def certified(self) -> bool:
        return self.status is Status.CERTIFIED

    @property
    def refuted(self) -> bool:
        return self.status is Status.REFUTED

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "witness_g": self.witness.to_list() if self.witness is not None else None,
            "refutation_index": self.refutation_index,
            "detail": self.detail,
            "partial_g": self.partial.to_list(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> CertVerdict:
        w = d.get("witness_g")
        return cls(
            Status(d["status"]),
            GSequence(tuple(w)) if w is not None else None,
            d.get("refutation_index"),
            d.get("detail", ""),
            GSequence(tuple(d.get("partial_g", ()))),
        )


@dataclass(frozen=True)
class GZeroInterval:
    lower: Fraction
    upper_bound_lo: Fraction
    upper_bound_hi: Fraction
    tolerance: Fraction

    @property
    def exact(self) -> bool:
        return self.upper_bound_lo == self.upper_bound_hi

    def to_dict(self) -> dict:
        return {
            "lower": rat_str(self.lower),
            "upper_bound_lo": rat_str(self.upper_bound_lo),
            "upper_bound_hi": rat_str(self.upper_bound_hi),
            "tolerance": rat_str(self.tolerance),
            "exact": self.exact,
        }

    @classmethod
    def from_dict(cls, d: dict) -> GZeroInterval:
        return cls(
            rat(d["lower"]),
            rat(d["upper_bound_lo"]),
            rat(d["upper_bound_hi"]),
            rat(d["tolerance"]),
        )


def _certified(g, detail="") -> CertVerdict:
    return CertVerdict(Status.CERTIFIED, GSequence(tuple(g)), None, detail)


def _refuted(index: int, g, detail: str) -> CertVerdict:
    return CertVerdict(Status.REFUTED, None, index, detail, GSequence(tuple(g)))


def _degenerate() -> CertVerdict:
    return CertVerdict(Status.DEGENERATE, GSequence(()), None, "zero sequence (zero measure)")


def alpha_from_g(g: GSequence, xi: RatLike, c: RatLike = 1) -> SCoefficients:
    """S-fraction coefficients alpha_1..alpha_L from g_0..g_L.

    The result need not be standard (e.g. all-zero ``g`` gives 1,0,1,0,...).
    """
    xi = rat(xi)
    if xi < 0:
        raise ValueError("xi must be nonnegative")
    gs = g.g
    for i, x in enumerate(gs):
        if x < 0:
            raise NegativeG(f"g_{i} = {x} is negative")
    alphas = []
    for i in range(1, len(gs)):
        if i % 2:
            alphas.append(xi * (1 + gs[i - 1]) + gs[i])
        else:
            alphas.append(gs[i - 1] * gs[i] / (1 + gs[i - 2]))
    return SCoefficients(rat(c), tuple(alphas), False)


def g_from_alpha(s: SCoefficients, xi: RatLike, g0: RatLike = 0) -> CertVerdict:
    """Invert the g-parametrization starting from ``g0``.

    Refuted at the first index where no nonnegative g can reproduce the
    coefficients.  A fraction that stops after an odd level is closed
    with ``g = 0``; one that stops after an even level is refuted at the
    next odd index, which would need ``alpha >= xi > 0``.
    """
    xi, g0 = rat(xi), rat(g0)
    if xi <= 0:
        raise ValueError("xi must be positive")
    if g0 < 0:
        raise ValueError("g0 must be nonnegative")
    if not s.is_standard():
        raise NonStandardInput("coefficient sequence is not in standard form")
    if s.c == 0:
        return _degenerate()

    alphas = s.stripped()
    M = len(alphas)
    g = [g0]
    i = 1
    while True:
        if i > M and not s.terminated:
            return _certified(g, "prefix exhausted")
        g_odd = s.alpha(i) - xi * (1 + g[-1])
        g.append(g_odd)
        if g_odd < 0:
            return _refuted(i, g, f"g_{i} = {g_odd} < 0")
        if i + 1 > M:
            if not s.terminated:
                return _certified(g, "prefix exhausted")
            # alpha_{i+1} = 0 forces g_{i+1} = 0 unless g_i = 0 leaves it free
            if g_odd > 0:
                g.append(Fraction(0))
            return _certified(g, f"fraction terminates after alpha_{i}")
        a_even = s.alpha(i + 1)
        if g_odd == 0:
            return _refuted(
                i + 1, g, f"g_{i} = 0 cannot produce alpha_{i + 1} = {a_even}"
            )
        g_even = a_even * (1 + g[-2]) / g_odd
        g.append(g_even)
        if g_even < 0:
            return _refuted(i + 1, g, f"g_{i + 1} = {g_even} < 0")
        i += 2


def _stieltjes_witness(s: SCoefficients) -> CertVerdict:
    # xi = 0: alpha >= 0 is necessary and sufficient
    for i, a in enumerate(s.alphas, start=1):
        if a < 0:
            return _refuted(i, [], f"alpha_{i} = {a} < 0")
    g = [Fraction(0)]
    for i, a in enumerate(s.alphas, start=1):
        if i % 2:
            g.append(a)
        elif g[-1] == 0:
            g.append(Fraction(0))
        else:
            g.append(a * (1 + g[-2]) / g[-1])
    return _certified(g, "nonnegative S-fraction")


def certify_xi_stieltjes(a: MomentSequence, xi: RatLike) -> CertVerdict:
    """Decide whether some measure on [xi, inf) has moments a_0..a_N."""
    xi = rat(xi)
    if xi < 0:
        raise ValueError("xi must be nonnegative")
    try:
        s = s_extract(a)
    except NotSFracRepresentable as exc:
        return _refuted(exc.index, [], f"no standard S-fraction: {exc}")
    if s.c == 0:
        return _degenerate()
    if xi == 0:
        return _stieltjes_witness(s)
    return g_from_alpha(s, xi, 0)


def g_from_shifted_alpha(alphas_b, xi: Fraction, length: int) -> list:
    """g_0..g_{length-1} from the S-fraction of the (-xi)-transformed sequence.

    g_{2k-1} = alpha_{2k-1},
    g_{2k}   = alpha_{2k} (1 + g_{2k-2}) / (xi (1 + g_{2k-2}) + g_{2k-1}).
    Coefficients past ``alphas_b`` are read as zero.
    """
    def al(i):
        return alphas_b[i - 1] if i <= len(alphas_b) else Fraction(0)

    g = [Fraction(0)]
    for i in range(1, length):
        if i % 2:
            g.append(al(i))
        else:
            g.append((1 + g[i - 2]) / (xi * (1 + g[i - 2]) + g[i - 1]) * al(i))
    return g


def dual_route_check(a: MomentSequence, xi: RatLike) -> tuple:
    """Compute the certificate g two ways and insist they agree.

    Route (i) transforms ``a`` by ``-xi``, extracts that S-fraction and maps
    its coefficients to g directly.  Route (ii) is the witness of
    :func:`certify_xi_stieltjes`.  Returns ``(route_i, route_ii)``.
    """
    xi = rat(xi)
    if xi <= 0:
        raise ValueError("xi must be positive")
    verdict = certify_xi_stieltjes(a, xi)
    if verdict.status is Status.DEGENERATE:
        return GSequence(()), GSequence(())
    if not verdict.certified:
        raise ValueError("dual route check needs a certified prefix")
    route_ii = list(verdict.witness.g)

    sb = s_extract(binomial_transform(a, -xi))
    alphas_b = sb.stripped()
    if any(x < 0 for x in alphas_b):
        raise RouteMismatch("shifted sequence has a negative S-fraction coefficient")
    n = len(route_ii) if sb.terminated else min(len(route_ii), len(alphas_b) + 1)
    route_i = g_from_shifted_alpha(alphas_b, xi, n)
    common = min(len(route_i), len(route_ii))
    for k in range(common):
        if route_i[k] != route_ii[k]:
            raise RouteMismatch(
                f"g_{k}: route (i) gives {route_i[k]}, route (ii) gives {route_ii[k]}"
            )
    return GSequence(tuple(route_i)), GSequence(tuple(route_ii))


def rebase_g0(g: GSequence, xi: RatLike, g0_new: RatLike) -> CertVerdict:
    """Re-solve for g' with a new starting value, keeping every alpha fixed.

    g'_{2k+1} = g_{2k+1} + xi (g_{2k} - g'_{2k})
    g'_{2k+2} = g_{2k+2} (g_{2k+1} / g'_{2k+1}) (1 + g'_{2k}) / (1 + g_{2k})
    """
    xi, g0_new = rat(xi), rat(g0_new)
    if xi <= 0:
        raise ValueError("xi must be positive")
    if g0_new < 0:
        raise ValueError("g0_new must be nonnegative")
    gs = g.g
    if not gs:
        raise ValueError("empty g sequence")
    for i, x in enumerate(gs):
        if x < 0:
            raise NegativeG(f"g_{i} = {x} is negative")

    if g0_new == gs[0]:
        return _certified(gs, "identity rebase")

    gp = [g0_new]
    for i in range(1, len(gs)):
        if i % 2:
            v = gs[i] + xi * (gs[i - 1] - gp[i - 1])
        elif gp[i - 1] == 0:
            if gs[i - 1] * gs[i] != 0:
                gp.append(Fraction(0))
                return _refuted(
                    i, gp, f"g'_{i - 1} = 0 cannot reproduce a nonzero alpha_{i}"
                )
            v = Fraction(0)
        else:
            v = gs[i] * (gs[i - 1] / gp[i - 1]) * (1 + gp[i - 2]) / (1 + gs[i - 2])
        gp.append(v)
        if v < 0:
            return _refuted(i, gp, f"g'_{i} = {v} < 0")

    if alpha_from_g(GSequence(tuple(gp)), xi).alphas != alpha_from_g(g, xi).alphas:
        raise RouteMismatch("rebased g does not reproduce the coefficients")
    return _certified(gp, f"rebased to g0 = {g0_new}")


def g0_max(a: MomentSequence, xi: RatLike, tol: RatLike) -> GZeroInterval:
    """Bracket the largest admissible starting value g_0.

    Feasibility of a candidate is decided exactly by the g recursion; the
    feasible set is an interval starting at 0, so bisection applies.  The
    search starts from the bound alpha_1/xi - 1.
    """
    xi, tol = rat(xi), rat(tol)
    if xi <= 0:
        raise ValueError("xi must be positive")
    if tol <= 0:
        raise ValueError("tol must be positive")
    s = s_extract(a)
    if s.c == 0:
        raise ValueError("g0 is unconstrained for the zero sequence")

    def feasible(x: Fraction) -> bool:
        return g_from_alpha(s, xi, x).certified

    if not feasible(Fraction(0)):
        raise InfeasibleBase("g0 = 0 is infeasible: prefix is not xi-Stieltjes")
    if not s.alphas:
        raise ValueError("alpha_1 is not determined by a single moment")
    lo, hi = Fraction(0), s.alphas[0] / xi - 1
    if feasible(hi):
        return GZeroInterval(Fraction(0), hi, hi, tol)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if feasible(mid):
            lo = mid
        else:
            hi = mid
    return GZeroInterval(Fraction(0), lo, hi, tol)


def certify_wall(a: MomentSequence, xi: RatLike) -> CertVerdict:
    """Decide whether some measure on [0, xi] has moments a_0..a_N.

    Runs g_0 = 0, g_n = alpha_n / (xi (1 - g_{n-1})) and requires every g_n
    in [0, 1].
    """
    xi = rat(xi)
    if xi <= 0:
        raise ValueError("xi must be positive")
    try:
        s = s_extract(a)
    except NotSFracRepresentable as exc:
        return _refuted(exc.index, [], f"no standard S-fraction: {exc}")
    if s.c == 0:
        return _degenerate()
    g = [Fraction(0)]
    for n, alpha in enumerate(s.alphas, start=1):
        prev = g[-1]
        if prev == 1:
            return _refuted(n, g, f"g_{n - 1} = 1 but alpha_{n} = {alpha} is nonzero")
        v = alpha / (xi * (1 - prev))
        g.append(v)
        if not 0 <= v <= 1:
            return _refuted(n, g, f"g_{n} = {v} outside [0, 1]")
    if s.terminated:
        if g[-1] != 1:
            g.append(Fraction(0))
        return _certified(g, "fraction terminates")
    return _certified(g, "prefix exhausted")
