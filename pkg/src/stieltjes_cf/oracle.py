"""Ground truth that does not go through continued fractions.

Finite discrete measures, their exact moments, translation, and Hankel
minors.  Random measures come from a fixed 64-bit linear congruential
generator so the same seed gives the same measure on any platform:

    state <- (6364136223846793005 * state + 1442695040888963407) mod 2**64
    draw  <- state >> 33                      (31 usable bits)
    randint(lo, hi) = lo + draw mod (hi - lo + 1)

The initial state is the seed reduced mod 2**64, advanced once before
the first draw.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cfrac import MomentSequence
from .series import RatLike, rat, rat_str

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
LCG_MASK = (1 << 64) - 1


class Lcg:
    def __init__(self, seed: int):
        self.state = seed & LCG_MASK

    def next(self) -> int:
        self.state = (LCG_MULTIPLIER * self.state + LCG_INCREMENT) & LCG_MASK
        return self.state >> 33

    def randint(self, lo: int, hi: int) -> int:
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next() % (hi - lo + 1)


@dataclass(frozen=True)
class DiscreteMeasure:
    atoms: tuple = ()
    weights: tuple = ()

    def __post_init__(self):
        atoms = tuple(rat(x) for x in self.atoms)
        weights = tuple(rat(w) for w in self.weights)
        if len(atoms) != len(weights):
            raise ValueError("atoms and weights differ in length")
        if any(w <= 0 for w in weights):
            raise ValueError("weights must be strictly positive")
        if len(set(atoms)) != len(atoms):
            raise ValueError("atoms must be pairwise distinct")
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "weights", weights)

    def __len__(self) -> int:
        return len(self.atoms)

    @property
    def min_atom(self):
        return min(self.atoms) if self.atoms else None

    def to_dict(self) -> dict:
        return {
            "atoms": [rat_str(x) for x in self.atoms],
            "weights": [rat_str(w) for w in self.weights],
        }

    @classmethod
    def from_dict(cls, d: dict) -> DiscreteMeasure:
        return cls(tuple(d["atoms"]), tuple(d["weights"]))


@dataclass(frozen=True)
class HankelReport:
    dets_H: tuple
    dets_Hshift: tuple
    psd: tuple

    def to_dict(self) -> dict:
        return {
            "dets_H": [rat_str(d) for d in self.dets_H],
            "dets_Hshift": [rat_str(d) for d in self.dets_Hshift],
            "psd": list(self.psd),
        }

    @classmethod
    def from_dict(cls, d: dict) -> HankelReport:
        return cls(
            tuple(rat(x) for x in d["dets_H"]),
            tuple(rat(x) for x in d["dets_Hshift"]),
            tuple(bool(p) for p in d["psd"]),
        )


def moments(m: DiscreteMeasure, n_max: int) -> MomentSequence:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    out = []
    powers = list(m.weights)
    for _ in range(n_max + 1):
        out.append(sum(powers, Fraction(0)))
        powers = [p * x for p, x in zip(powers, m.atoms)]
    return MomentSequence(tuple(out))


def translate(m: DiscreteMeasure, xi: RatLike) -> DiscreteMeasure:
    xi = rat(xi)
    return DiscreteMeasure(tuple(x + xi for x in m.atoms), m.weights)


def det(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            result = -result
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] / p
                for k in range(col, n):
                    a[r][k] -= f * a[col][k]
    return result


def _leading_minors(seq, shift: int, count: int) -> list:
    return [
        det([[seq[i + j + shift] for j in range(n)] for i in range(n)])
        for n in range(1, count + 1)
    ]


def _psd_flag(minors) -> bool:
    # finite discrete measures: positive minors, then zeros for good
    seen_zero = False
    for d in minors:
        if d < 0 or (seen_zero and d != 0):
            return False
        if d == 0:
            seen_zero = True
    return True


def hankel_report(a: MomentSequence) -> HankelReport:
    ms = a.moments
    N = len(ms) - 1
    dets_h = _leading_minors(ms, 0, N // 2 + 1)
    dets_s = _leading_minors(ms, 1, (N - 1) // 2 + 1) if N >= 1 else []
    return HankelReport(
        tuple(dets_h), tuple(dets_s), (_psd_flag(dets_h), _psd_flag(dets_s))
    )


def random_measure(
    seed: int,
    count: int,
    min_atom: RatLike,
    max_atom: RatLike,
    denom_bound: int = 6,
) -> DiscreteMeasure:
    """Reproducible measure with ``count`` rational atoms in [min_atom, max_atom].

    Atoms are ``min + (max - min) * k / q`` with ``q`` in ``[1, denom_bound]``
    and ``k`` in ``[0, q]``; weights are ``p / q`` with both in
    ``[1, denom_bound]``.  Duplicate atoms are redrawn.  Output is sorted
    by atom.
    """
    lo, hi = rat(min_atom), rat(max_atom)
    if lo > hi:
        raise ValueError("min_atom exceeds max_atom")
    if count < 0:
        raise ValueError("count must be nonnegative")
    if denom_bound < 1:
        raise ValueError("denom_bound must be at least 1")
    rng = Lcg(seed)
    rng.next()
    atoms: list = []
    tries = 0
    while len(atoms) < count:
        tries += 1
        if tries > 1000 * (count + 1):
            raise ValueError("cannot draw enough distinct atoms in this range")
        q = rng.randint(1, denom_bound)
        k = rng.randint(0, q)
        x = lo + (hi - lo) * Fraction(k, q)
        if x not in atoms:
            atoms.append(x)
    weights = [
        Fraction(rng.randint(1, denom_bound), rng.randint(1, denom_bound))
        for _ in range(count)
    ]
    pairs = sorted(zip(atoms, weights))
    return DiscreteMeasure(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))
