from fractions import Fraction as F

from hypothesis import given, strategies as st

from stieltjes_cf.cfrac import JCoefficients, MomentSequence, SCoefficients, contract, j_expand, s_expand
from stieltjes_cf.oracle import DiscreteMeasure, moments, translate
from stieltjes_cf.transforms import binomial_transform, j_shift

from conftest import nonneg_fractions, positive_fractions, small_fractions
from reference import binomial_naive, measure_moments


def test_point_mass_shift():
    b = binomial_transform(MomentSequence.of([1, 1, 1, 1]), 1)
    assert b.moments == (1, 2, 4, 8)


def test_half_example_shift_down():
    b = binomial_transform(MomentSequence.of([1, F(3, 2), F(5, 2), F(9, 2)]), -1)
    # oracle: moments of (delta_0 + delta_1)/2
    assert list(b.moments) == measure_moments([0, 1], [F(1, 2), F(1, 2)], 3)
    assert b.moments == (1, F(1, 2), F(1, 2), F(1, 2))


@given(st.lists(small_fractions(), min_size=1, max_size=10))
def test_identity_at_zero(a):
    m = MomentSequence(tuple(a))
    assert binomial_transform(m, 0) == m


@given(st.lists(small_fractions(), min_size=1, max_size=10), small_fractions(-5, 5, 6))
def test_matches_naive_formula_and_inverts(a, xi):
    m = MomentSequence(tuple(a))
    b = binomial_transform(m, xi)
    assert list(b.moments) == binomial_naive(a, xi)
    assert binomial_transform(b, -xi) == m
    assert len(b) == len(m)


def test_j_shift_examples():
    j = JCoefficients((1, 2, 2), (1, 1))
    assert j_shift(j, 1) == JCoefficients((2, 3, 3), (1, 1))
    assert j_shift(j, 0) == j
    shifted = j_shift(JCoefficients((F(3, 2), F(3, 2), 0), (F(1, 4), 0)), -1)
    assert shifted == JCoefficients((F(1, 2), F(1, 2), -1), (F(1, 4), 0))


def test_j_shift_example_series_oracle():
    # oracle for the shifted half example: series equals the -1 transform
    s = SCoefficients(1, (F(3, 2), F(1, 6), F(4, 3), 0), True)
    a = MomentSequence(s_expand(s, 10).coeffs)
    shifted = j_shift(contract(s), -1)
    assert j_expand(shifted, 1, 10).coeffs == binomial_transform(a, -1).moments


@given(
    positive_fractions(),
    st.lists(nonneg_fractions(), max_size=10),
    small_fractions(-4, 4, 8),
    st.integers(0, 20),
)
def test_shift_matches_transform(c, alphas, xi, order):
    s = SCoefficients(c, alphas)
    a = MomentSequence(s_expand(s, order).coeffs)
    assert j_expand(j_shift(contract(s), xi), c, order).coeffs == binomial_transform(a, xi).moments


@given(
    st.lists(st.tuples(small_fractions(-5, 5, 6), positive_fractions(5, 6)), max_size=5, unique_by=lambda p: p[0]),
    small_fractions(-5, 5, 6),
)
def test_translation_consistency(pairs, xi):
    m = DiscreteMeasure(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))
    assert binomial_transform(moments(m, 8), xi) == moments(translate(m, xi), 8)
