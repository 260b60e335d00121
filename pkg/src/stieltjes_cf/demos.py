"""Worked examples reproduced end to end, each returning pass/fail."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .certify import (
    GSequence,
    alpha_from_g,
    certify_wall,
    certify_xi_stieltjes,
    g0_max,
    g_from_alpha,
    rebase_g0,
)
from .cfrac import MomentSequence, s_expand, s_extract

TOL = Fraction(1, 10**6)


@dataclass
class DemoResult:
    name: str
    passed: bool
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def catalan(n: int) -> MomentSequence:
    return MomentSequence(tuple(Fraction(comb(2 * k, k), k + 1) for k in range(n)))


def half_example(n: int = 5) -> MomentSequence:
    return MomentSequence(tuple(Fraction(1 + 2**k, 2) for k in range(n)))


def demo_catalan_sfraction() -> DemoResult:
    s = s_extract(catalan(9))
    ok = s.c == 1 and s.alphas == (1,) * 8 and not s.terminated
    return DemoResult("catalan S-fraction", ok, f"alphas = {[str(a) for a in s.alphas]}")


def demo_catalan_wall() -> DemoResult:
    v = certify_wall(catalan(40), 4)
    g = v.witness.g if v.witness else ()
    ok = v.certified and all(g[n] == Fraction(n, 2 * (n + 1)) for n in range(1, len(g)))
    return DemoResult("catalan support in [0,4]", ok, f"{v.status.value}, {len(g) - 1} g values")


def demo_catalan_refuted() -> DemoResult:
    a = catalan(40)
    rows = []
    ok = True
    for xi in (Fraction(1, 10), Fraction(1, 4), Fraction(1, 2), Fraction(1)):
        v = certify_xi_stieltjes(a, xi)
        ok &= v.refuted
        rows.append(f"xi={xi}: index {v.refutation_index}")
    return DemoResult("catalan not xi-Stieltjes for xi > 0", ok, "; ".join(rows))


def demo_half_alphas() -> DemoResult:
    s = s_extract(half_example())
    want = (Fraction(3, 2), Fraction(1, 6), Fraction(4, 3))
    ok = s.alphas == want and s.terminated and s.c == 1
    return DemoResult("(1^n+2^n)/2 S-fraction", ok, f"alphas = {[str(a) for a in s.alphas]}")


def demo_half_witness() -> DemoResult:
    v = g_from_alpha(s_extract(half_example()), 1, 0)
    want = (0, Fraction(1, 2), Fraction(1, 3), 0)
    ok = v.certified and v.witness.g == want
    return DemoResult("(1^n+2^n)/2 witness at xi=1", ok, f"g = {v.witness.to_list() if v.witness else None}")


def demo_half_rebase() -> DemoResult:
    # g1, g2 from the closed forms; g3 follows from alpha_3 = (1 + g2) + g3
    base = g_from_alpha(s_extract(half_example()), 1, 0).witness
    ok = True
    rows = []
    for g0 in (Fraction(1, 8), Fraction(1, 4), Fraction(3, 8)):
        v = rebase_g0(base, 1, g0)
        p = v.partial.g
        g2 = (1 + g0) / (3 * (1 - 2 * g0))
        ok &= v.refuted and v.refutation_index == 3
        ok &= p[1] == Fraction(1, 2) - g0 and p[2] == g2 and p[3] == Fraction(1, 3) - g2
        rows.append(f"g0={g0}: g3={p[3]}")
    return DemoResult("(1^n+2^n)/2 infeasible for g0 > 0", ok, "; ".join(rows))


def demo_half_g0max() -> DemoResult:
    iv = g0_max(half_example(), 1, TOL)
    ok = iv.upper_bound_lo == 0 and iv.upper_bound_hi <= TOL
    return DemoResult("(1^n+2^n)/2 g0max = 0", ok, f"[{iv.upper_bound_lo}, {iv.upper_bound_hi}]")


def demo_ones_g0max() -> DemoResult:
    s = alpha_from_g(GSequence((1, 1, 1, 1)), 1)
    a = MomentSequence(s_expand(s, 8).coeffs)
    iv = g0_max(a, 1, TOL)
    ok = iv.upper_bound_lo >= 1
    return DemoResult("g=(1,1,1,1) gives g0max >= 1", ok, f"[{iv.upper_bound_lo}, {iv.upper_bound_hi}]")


DEMOS = (
    demo_catalan_sfraction,
    demo_catalan_wall,
    demo_catalan_refuted,
    demo_half_alphas,
    demo_half_witness,
    demo_half_rebase,
    demo_half_g0max,
    demo_ones_g0max,
)


def run_demos() -> list:
    return [demo() for demo in DEMOS]


def format_table(results) -> str:
    width = max(len(r.name) for r in results)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {r.detail}" for r in results]
    return "\n".join(lines)
