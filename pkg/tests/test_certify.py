from fractions import Fraction as F

import pytest
from hypothesis import assume, given, strategies as st

from stieltjes_cf.certify import (
    CertVerdict,
    GSequence,
    GZeroInterval,
    InfeasibleBase,
    NegativeG,
    NonStandardInput,
    Status,
    alpha_from_g,
    certify_wall,
    certify_xi_stieltjes,
    dual_route_check,
    g0_max,
    g_from_alpha,
    rebase_g0,
)
from stieltjes_cf.cfrac import MomentSequence, SCoefficients, s_expand, s_extract
from stieltjes_cf.oracle import DiscreteMeasure, moments, random_measure

from conftest import nonneg_fractions, positive_fractions
from reference import catalan_numbers, straight_line_refutation, wall_recursion

HALF = MomentSequence.of([1, F(3, 2), F(5, 2), F(9, 2), F(17, 2)])
TOL = F(1, 10**6)


def catalan(n):
    return MomentSequence(tuple(catalan_numbers(n)))


def delta(x, n):
    return moments(DiscreteMeasure((x,), (1,)), n)


class TestAlphaFromG:
    def test_first_coefficient(self):
        assert alpha_from_g(GSequence((0, F(1, 2))), 1).alphas == (F(3, 2),)

    def test_all_zero(self):
        assert alpha_from_g(GSequence((0,) * 5), 1).alphas == (1, 0, 1, 0)

    def test_all_ones(self):
        assert alpha_from_g(GSequence((1,) * 5), 1).alphas == (3, F(1, 2), 3, F(1, 2))
        assert alpha_from_g(GSequence((1,) * 4), 1).alphas == (3, F(1, 2), 3)
        # round trip through the inverse map started at g0 = 1
        back = g_from_alpha(alpha_from_g(GSequence((1,) * 5), 1), 1, 1)
        assert back.certified and back.witness.g == (1,) * 5

    def test_negative(self):
        with pytest.raises(NegativeG):
            alpha_from_g(GSequence((0, -1)), 1)

    def test_carries_c(self):
        assert alpha_from_g(GSequence((0, 1)), 1, c=3).c == 3


class TestGFromAlpha:
    def test_half_example(self):
        v = g_from_alpha(SCoefficients(1, (F(3, 2), F(1, 6), F(4, 3)), True), 1, 0)
        assert v.status is Status.CERTIFIED
        assert v.witness.g == (0, F(1, 2), F(1, 3), 0)

    def test_catalan_at_one(self):
        v = g_from_alpha(SCoefficients(1, (1,) * 30), 1, 0)
        # g_1 = 0 cannot carry alpha_2 = 1
        assert v.refuted and v.refutation_index == 2
        assert v.refutation_index == straight_line_refutation([1] * 30, 1)

    def test_point_mass(self):
        v = g_from_alpha(SCoefficients(1, (2,), True), 1, 0)
        assert v.certified and v.witness.g == (0, 1, 0)

    def test_even_termination_refuted(self):
        # (delta_0 + delta_1)/2 has alphas (1/2, 1/2) and an atom below xi
        v = g_from_alpha(SCoefficients(1, (F(1, 2), F(1, 2)), True), F(1, 10), 0)
        assert v.refuted and v.refutation_index == 3

    def test_all_zero_terminated(self):
        v = g_from_alpha(SCoefficients(5, (), True), 1, 0)
        assert v.refuted and v.refutation_index == 1

    def test_non_standard(self):
        with pytest.raises(NonStandardInput):
            g_from_alpha(SCoefficients(1, (1, 0, 1), True), 1, 0)

    def test_degenerate(self):
        assert g_from_alpha(SCoefficients(0, (), True), 1, 0).status is Status.DEGENERATE

    def test_bad_parameters(self):
        s = SCoefficients(1, (2,), True)
        with pytest.raises(ValueError):
            g_from_alpha(s, 0, 0)
        with pytest.raises(ValueError):
            g_from_alpha(s, 1, -1)


class TestCertify:
    def test_half_example(self):
        v = certify_xi_stieltjes(HALF, 1)
        assert v.certified and v.witness.g == (0, F(1, 2), F(1, 3), 0)

    def test_catalan_short_prefix_is_consistent(self):
        # eight Catalan moments still fit a measure on [1/10, inf)
        v = certify_xi_stieltjes(catalan(8), F(1, 10))
        assert v.certified
        assert straight_line_refutation([1] * 7, F(1, 10)) is None

    def test_catalan_refuted(self):
        v = certify_xi_stieltjes(catalan(12), F(1, 10))
        assert v.refuted
        assert v.refutation_index == straight_line_refutation([1] * 11, F(1, 10)) == 9

    def test_point_mass_at_two(self):
        a = MomentSequence.of([1, 2, 4, 8, 16])
        assert certify_xi_stieltjes(a, 2).certified
        v = certify_xi_stieltjes(a, 3)
        assert v.refuted and v.refutation_index == 1

    def test_xi_zero(self):
        v = certify_xi_stieltjes(catalan(10), 0)
        assert v.certified
        assert s_expand(alpha_from_g(v.witness, 0), 9).coeffs == catalan(10).moments
        bad = certify_xi_stieltjes(MomentSequence.of([1, 1, F(1, 2)]), 0)
        assert bad.refuted and bad.refutation_index == 2

    def test_not_representable(self):
        v = certify_xi_stieltjes(MomentSequence.of([1, 0, 1]), 1)
        assert v.refuted and v.refutation_index == 1
        assert "S-fraction" in v.detail

    def test_zero_sequence(self):
        assert certify_xi_stieltjes(MomentSequence.of([0, 0, 0]), 1).status is Status.DEGENERATE

    def test_negative_xi(self):
        with pytest.raises(ValueError):
            certify_xi_stieltjes(HALF, -1)

    def test_verdict_roundtrip(self):
        for v in (certify_xi_stieltjes(HALF, 1), certify_xi_stieltjes(catalan(12), 1)):
            assert CertVerdict.from_dict(v.to_dict()) == v


class TestDualRoute:
    def test_half_example(self):
        r1, r2 = dual_route_check(HALF, 1)
        assert r1.g == r2.g == (0, F(1, 2), F(1, 3), 0)

    def test_point_mass(self):
        r1, r2 = dual_route_check(delta(2, 6), 1)
        assert r1.g == r2.g == (0, 1, 0)

    def test_zero(self):
        r1, r2 = dual_route_check(MomentSequence.of([0, 0]), 1)
        assert r1.g == r2.g == ()

    def test_requires_certified(self):
        with pytest.raises(ValueError):
            dual_route_check(catalan(12), 1)


class TestRebase:
    def test_half_example_infeasible(self):
        v = rebase_g0(GSequence((0, F(1, 2), F(1, 3), 0)), 1, F(1, 4))
        assert v.refuted and v.refutation_index == 3
        assert v.partial.g[3] < 0

    def test_down_to_zero(self):
        v = rebase_g0(GSequence((1, 1, 1, 1)), 1, 0)
        assert v.certified and v.witness.is_nonnegative()
        assert v.witness.g[0] == 0

    def test_identity(self):
        g = GSequence((F(1, 3), 2, F(5, 7), 0, 4))
        assert rebase_g0(g, F(3, 2), F(1, 3)).witness == g

    def test_zero_odd_entry(self):
        # g'_3 = g_3 = 0 leaves g'_4 free; it is set to zero
        g = GSequence((1, 1, 0, 0, 5, 2))
        v = rebase_g0(g, 1, 0)
        assert v.certified and v.witness.g == (0, 2, 0, 0, 0, 7)
        assert alpha_from_g(v.witness, 1).alphas == alpha_from_g(g, 1).alphas

    def test_cannot_carry_nonzero(self):
        v = rebase_g0(GSequence((0, F(1, 2), 2)), 1, F(1, 2))
        assert v.refuted and v.refutation_index == 2

    def test_rejects_negative_input(self):
        with pytest.raises(NegativeG):
            rebase_g0(GSequence((0, -1)), 1, 0)


class TestG0Max:
    def test_half_example(self):
        iv = g0_max(HALF, 1, TOL)
        assert iv.upper_bound_lo == 0 and 0 < iv.upper_bound_hi <= TOL

    def test_from_ones(self):
        s = alpha_from_g(GSequence((1, 1, 1, 1)), 1)
        iv = g0_max(MomentSequence(s_expand(s, 6).coeffs), 1, TOL)
        assert iv.upper_bound_lo >= 1
        assert iv.upper_bound_hi - iv.upper_bound_lo <= TOL

    def test_point_mass_exact(self):
        iv = g0_max(delta(2, 5), 1, TOL)
        assert iv.exact and iv.upper_bound_lo == 1
        # oracle: grid scan with the reference recursion plus endpoint
        alphas = s_extract(delta(2, 5)).alphas
        for k in range(0, 161):
            x = F(k, 64)
            ok = straight_line_refutation(alphas, 1, True, g0=x) is None
            assert ok == (x <= 1)

    def test_infeasible_base(self):
        with pytest.raises(InfeasibleBase):
            g0_max(catalan(12), 1, TOL)

    def test_roundtrip(self):
        iv = g0_max(HALF, 1, TOL)
        assert GZeroInterval.from_dict(iv.to_dict()) == iv


class TestWall:
    def test_catalan_at_four(self):
        v = certify_wall(catalan(30), 4)
        assert v.certified
        assert all(v.witness.g[n] == F(n, 2 * (n + 1)) for n in range(1, 30))
        assert list(v.witness.g) == wall_recursion([1] * 29, 4)

    def test_catalan_below_four(self):
        v = certify_wall(catalan(24), F(7, 2))
        assert v.refuted
        g = wall_recursion([1] * 23, F(7, 2))
        first = next(n for n in range(1, 24) if not 0 <= g[n] <= 1)
        assert v.refutation_index == first

    def test_point_mass_half(self):
        v = certify_wall(MomentSequence.of([1, F(1, 2), F(1, 4), F(1, 8)]), 1)
        assert v.certified and v.witness.g == (0, F(1, 2), 0)

    def test_atom_at_endpoint(self):
        v = certify_wall(delta(1, 5), 1)
        assert v.certified and v.witness.g == (0, 1)

    def test_negative(self):
        v = certify_wall(MomentSequence.of([1, 1, F(1, 2)]), 10)
        assert v.refuted and v.refutation_index == 2


# ----- properties over random measures -------------------------------------

XI_GRID = [F(k, 4) for k in range(0, 13)]


@pytest.mark.parametrize("seed", range(60))
def test_soundness_and_witness(seed):
    xi = XI_GRID[seed % len(XI_GRID)]
    m = random_measure(seed, 1 + seed % 4, xi, xi + 6)
    for n in range(0, 2 * len(m) + 4):
        a = moments(m, n)
        v = certify_xi_stieltjes(a, xi)
        assert v.certified, (seed, n, v)
        assert v.witness.is_nonnegative()
        s = alpha_from_g(v.witness, xi, c=a[0])
        assert s_expand(s, n).coeffs == a.moments
        odd = s.alphas[0::2]
        assert all(x >= xi for x in odd)
        if xi > 0:
            r1, r2 = dual_route_check(a, xi)
            k = min(len(r1), len(r2))
            assert r1.g[:k] == r2.g[:k]


@pytest.mark.parametrize("seed", range(30))
def test_refutation_detection(seed):
    xi = 1 + F(seed % 5, 2)
    m = random_measure(seed, 1 + seed % 3, xi, xi + 5)
    low = DiscreteMeasure(m.atoms + (xi - F(1, 3),), m.weights + (F(1, 2),))
    a = moments(low, 2 * len(low) + 2)
    v = certify_xi_stieltjes(a, xi)
    assert v.refuted
    s = s_extract(a)
    assert v.refutation_index == straight_line_refutation(s.alphas, xi, s.terminated)


@pytest.mark.parametrize("seed", range(20))
def test_xi_monotone(seed):
    m = random_measure(100 + seed, 3, 0, 4)
    a = moments(m, 8)
    refuted = False
    for xi in [F(k, 8) for k in range(0, 41)]:
        v = certify_xi_stieltjes(a, xi)
        if refuted:
            assert v.refuted
        refuted = refuted or v.refuted
    assert refuted


@pytest.mark.parametrize("seed", range(20))
def test_wall_sandwich(seed):
    xi = F(seed % 4, 2)
    upper = xi + 3
    m = random_measure(200 + seed, 1 + seed % 4, xi, upper)
    a = moments(m, 2 * len(m) + 3)
    assert certify_xi_stieltjes(a, xi).certified
    assert certify_wall(a, upper).certified


@pytest.mark.parametrize("seed", range(25))
def test_interval_property(seed):
    xi = F(1 + seed % 3, 2)
    m = random_measure(300 + seed, 1 + seed % 3, xi, xi + 4)
    a = moments(m, 2 * len(m) + 2)
    tol = F(1, 1000)
    iv = g0_max(a, xi, tol)
    s = s_extract(a)
    for k in range(0, 11):
        x = iv.upper_bound_lo * F(k, 10)
        assert g_from_alpha(s, xi, x).certified
    for bump in (F(1, 10**4), F(1, 10), 1, 10):
        assert g_from_alpha(s, xi, iv.upper_bound_hi + bump).refuted


g_vectors = st.lists(nonneg_fractions(6, 8), min_size=2, max_size=10)


@given(g_vectors, positive_fractions(4, 6), st.fractions(0, 1, max_denominator=10))
def test_rebase_invariance_and_monotonicity(g, xi, frac):
    assume(g[0] > 0)
    g = GSequence(tuple(g))
    new0 = g[0] * frac
    v = rebase_g0(g, xi, new0)
    assert v.certified
    gp = v.witness.g
    assert alpha_from_g(v.witness, xi).alphas == alpha_from_g(g, xi).alphas
    for i in range(len(g)):
        if i % 2 == 0:
            assert 0 <= gp[i] <= g[i]
        else:
            assert gp[i] >= g[i] >= 0


@given(g_vectors, positive_fractions(4, 6))
def test_witness_from_parametrization(g, xi):
    # any nonnegative g with g0 = 0 builds a certified prefix
    g = GSequence((0,) + tuple(g))
    s = alpha_from_g(g, xi)
    a = MomentSequence(s_expand(s, len(s.alphas)).coeffs)
    assert certify_xi_stieltjes(a, xi).certified
