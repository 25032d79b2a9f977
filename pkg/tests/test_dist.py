"""Distribution construction, moments, mixtures, and the stochastic
orders (expectation, usual, tail, tweakable)."""

from fractions import Fraction as F

import pytest
from hypothesis import given, seed, settings
from hypothesis import strategies as st

import distgames as dg
from distgames import errors
from distgames.dist import OrderResult

import oracles

QUANTILE_TOL = 1e-10


class TestConstruction:
    def test_atoms_sorted_with_masses_carried(self):
        P = dg.new_distribution([2, 1], [F(1, 4), F(3, 4)])
        assert P.atoms == (1, 2)
        assert P.masses == (F(3, 4), F(1, 4))

    def test_empty_rejected(self):
        with pytest.raises(errors.EmptySupport):
            dg.new_distribution([], [])

    def test_length_mismatch_rejected(self):
        with pytest.raises(errors.EmptySupport):
            dg.new_distribution([1, 2], [1])

    def test_zero_mass_rejected(self):
        with pytest.raises(errors.NonPositiveMass):
            dg.new_distribution([1, 2], [0, 1])

    def test_duplicate_atom_rejected(self):
        with pytest.raises(errors.DuplicateAtom):
            dg.new_distribution([1, 1], [F(1, 2), F(1, 2)])

    def test_exact_mass_sum_must_be_one(self):
        with pytest.raises(errors.MassSumNotOne):
            dg.new_distribution([1, 2], [F(1, 2), F(1, 3)])

    def test_float_mass_sum_within_tolerance(self):
        P = dg.new_distribution([1, 2], [0.5, 0.5 + 1e-14])
        assert len(P.atoms) == 2

    def test_dirac(self):
        P = dg.dirac(3)
        assert P.atoms == (3,)
        assert P.masses == (1,)


def test_moment_zero_is_one():
    P = dg.new_distribution([1, 5], [F(1, 3), F(2, 3)])
    assert dg.moment(P, 0) == 1


def test_moment_exact():
    P = dg.new_distribution([1, 2], [F(1, 2), F(1, 2)])
    assert dg.moment(P, 1) == F(3, 2)
    assert dg.moment(P, 2) == F(5, 2)


def test_moment_of_point_mass_is_power():
    assert dg.moment(dg.dirac(F(3)), 4) == 81


def test_mixture_identity():
    P = dg.new_distribution([1, 2], [F(1, 2), F(1, 2)])
    assert dg.mixture([(1, P)]) == P


def test_mixture_disjoint_supports():
    M = dg.mixture([(F(1, 2), dg.dirac(1)), (F(1, 2), dg.dirac(2))])
    assert M.atoms == (1, 2)
    assert M.masses == (F(1, 2), F(1, 2))


def test_mixture_merges_equal_atoms():
    M = dg.mixture([(F(1, 2), dg.dirac(1)), (F(1, 2), dg.dirac(1))])
    assert M == dg.dirac(1) or (M.atoms == (1,) and M.masses[0] == 1)


def test_mixture_weights_must_sum_to_one():
    with pytest.raises(errors.WeightsNotSimplex):
        dg.mixture([(F(1, 2), dg.dirac(1)), (F(1, 4), dg.dirac(2))])


def test_mixture_rejects_negative_weight():
    with pytest.raises(errors.WeightsNotSimplex):
        dg.mixture([(F(3, 2), dg.dirac(1)), (F(-1, 2), dg.dirac(2))])


def test_merge_weighted_drops_zero_weight_components():
    M = dg.merge_weighted([(0, dg.dirac(7)), (1, dg.dirac(1))])
    assert M.atoms == (1,)


@seed(1)
@settings(max_examples=200, deadline=None)
@given(
    st.fractions(min_value=0, max_value=1),
    st.integers(min_value=0, max_value=5),
)
def test_mixture_moment_is_affine(alpha, k):
    P1 = dg.new_distribution([1, 3], [F(1, 4), F(3, 4)])
    P2 = dg.new_distribution([2, 5], [F(2, 3), F(1, 3)])
    if alpha == 0 or alpha == 1:
        return
    M = dg.mixture([(alpha, P1), (1 - alpha, P2)])
    want = alpha * dg.moment(P1, k) + (1 - alpha) * dg.moment(P2, k)
    assert dg.moment(M, k) == want


class TestCdf:
    def test_below_support(self):
        assert dg.cdf(dg.dirac(1), 0.5) == 0

    def test_right_continuous_at_atom(self):
        assert dg.cdf(dg.dirac(1), 1) == 1

    def test_partial_sum(self):
        P = dg.new_distribution([1, 2], [0.3, 0.7])
        assert dg.cdf(P, 1.5) == 0.3


def test_compare_expectation_basic():
    assert dg.compare_expectation(dg.dirac(1), dg.dirac(2)) is OrderResult.LESS
    P = dg.new_distribution([1, 4], [F(1, 2), F(1, 2)])
    assert dg.compare_expectation(P, P) is OrderResult.EQUAL


def test_compare_expectation_not_antisymmetric():
    # different distributions with the same mean compare Equal
    P = dg.new_distribution([0, 2], [F(1, 2), F(1, 2)])
    assert dg.compare_expectation(P, dg.dirac(1)) is OrderResult.EQUAL


def test_usual_stochastic_point_masses():
    assert dg.compare_usual_stochastic(dg.dirac(1), dg.dirac(2)) is OrderResult.LESS
    assert dg.compare_usual_stochastic(dg.dirac(2), dg.dirac(1)) is OrderResult.GREATER


def test_usual_stochastic_reflexive():
    P = dg.new_distribution([1, 2, 3], [F(1, 3), F(1, 3), F(1, 3)])
    assert dg.compare_usual_stochastic(P, P) is OrderResult.EQUAL


def test_usual_stochastic_crossing_cdfs_incomparable():
    # cdfs cross between the inner and outer pair: at x=2 the inner
    # distribution has mass 1/2 vs 1/2 for the outer, at x=1 the outer
    # is ahead, at x=3 the inner is ahead
    P1 = dg.new_distribution([1, 4], [F(1, 2), F(1, 2)])
    P2 = dg.new_distribution([2, 3], [F(1, 2), F(1, 2)])
    assert dg.compare_usual_stochastic(P1, P2) is OrderResult.INCOMPARABLE


class TestRlex:
    def test_top_coordinate_decides(self):
        assert dg.rlex_compare((1, 0), (0, 1)) is OrderResult.LESS

    def test_falls_through_to_lower_coordinates(self):
        assert dg.rlex_compare((1, 2, 3), (2, 2, 3)) is OrderResult.LESS

    def test_equal(self):
        v = (F(1, 3), F(2, 3))
        assert dg.rlex_compare(v, v) is OrderResult.EQUAL

    def test_length_mismatch(self):
        with pytest.raises(errors.DimensionMismatch):
            dg.rlex_compare((1, 2), (1, 2, 3))

    @seed(2)
    @settings(max_examples=300, deadline=None)
    @given(
        st.lists(st.integers(-5, 5), min_size=1, max_size=4),
        st.lists(st.integers(-5, 5), min_size=1, max_size=4),
    )
    def test_total_and_antisymmetric(self, v1, v2):
        if len(v1) != len(v2):
            return
        r12 = dg.rlex_compare(v1, v2)
        r21 = dg.rlex_compare(v2, v1)
        assert r12 is not OrderResult.INCOMPARABLE
        if v1 == v2:
            assert r12 is OrderResult.EQUAL
        else:
            assert {r12, r21} == {OrderResult.LESS, OrderResult.GREATER}


def test_common_support_mass_vectors():
    P1 = dg.new_distribution([1, 2], [F(1, 2), F(1, 2)])
    P2 = dg.new_distribution([2, 3], [F(1, 4), F(3, 4)])
    grid, v1, v2 = dg.common_support_mass_vectors(P1, P2)
    assert list(grid) == [1, 2, 3]
    assert v1 == (F(1, 2), F(1, 2), 0)
    assert v2 == (0, F(1, 4), F(3, 4))


class TestTailOrder:
    def test_mass_shift_upward_is_less(self):
        P1 = dg.new_distribution([1, 2], [F(1, 2), F(1, 2)])
        P2 = dg.new_distribution([1, 2], [F(2, 5), F(3, 5)])
        assert dg.tail_compare(P1, P2) is OrderResult.LESS

    def test_reflexive(self):
        P = dg.new_distribution([1, 2], [F(1, 2), F(1, 2)])
        assert dg.tail_compare(P, P) is OrderResult.EQUAL

    def test_point_masses(self):
        assert dg.tail_compare(dg.dirac(2), dg.dirac(3)) is OrderResult.LESS

    def test_support_below_one_rejected(self):
        P = dg.new_distribution([F(1, 2), 2], [F(1, 2), F(1, 2)])
        with pytest.raises(errors.SupportBelowOne):
            dg.tail_compare(P, dg.dirac(1))

    def test_total_on_valid_supports(self):
        # any two distinct mass vectors on a common grid compare strictly
        P1 = dg.new_distribution([1, 3, 5], [F(1, 3), F(1, 3), F(1, 3)])
        P2 = dg.new_distribution([1, 5], [F(9, 10), F(1, 10)])
        r = dg.tail_compare(P1, P2)
        assert r in (OrderResult.LESS, OrderResult.GREATER)


def test_segment_expectations_one_atom_per_segment():
    P = dg.new_distribution([1, 3], [0.5, 0.5])
    assert dg.segment_expectations(P, (0, 2, 4)) == (0.5, 1.5)


def test_segment_expectations_half_open_boundary():
    # an atom on an interior boundary belongs to the segment it opens
    assert dg.segment_expectations(dg.dirac(2), (0, 2, 4)) == (0, 2)


def test_segment_expectations_last_segment_closed():
    assert dg.segment_expectations(dg.dirac(4), (0, 2, 4)) == (0, 4)


def test_segment_expectations_atom_outside_skipped():
    assert dg.segment_expectations(dg.dirac(5), (0, 2, 4)) == (0, 0)


def test_cumulative_tail_expectations_are_suffix_sums():
    P = dg.new_distribution([1, 3], [0.5, 0.5])
    assert dg.cumulative_tail_expectations(P, (0, 2, 4)) == (2.0, 1.5)


def test_cumulative_tail_single_segment_is_mean():
    P = dg.new_distribution([1, 3], [F(1, 2), F(1, 2)])
    assert dg.cumulative_tail_expectations(P, (0, 4)) == (2,)


def test_cumulative_tail_point_mass():
    assert dg.cumulative_tail_expectations(dg.dirac(1), (0, 2, 4)) == (1, 0)


class TestTweakableOrder:
    def test_reflexive(self):
        P = dg.new_distribution([1, 3], [F(1, 2), F(1, 2)])
        assert dg.tweakable_compare(P, P, (0, 2, 4)) is OrderResult.EQUAL

    def test_point_masses_ordered(self):
        r = dg.tweakable_compare(dg.dirac(1), dg.dirac(3), (0, 2, 4))
        assert r is OrderResult.LESS

    def test_equal_despite_different_supports(self):
        # both cumulative vectors come out (2, 2), hand computation in
        # the oracle module
        P1, P2 = oracles.tweak_equal_pair()
        r = dg.tweakable_compare(P1, P2, oracles.TWEAK_EQUAL_PARTITION)
        assert r is OrderResult.EQUAL

    def test_support_outside_partition_rejected(self):
        with pytest.raises(errors.SupportOutsidePartition):
            dg.tweakable_compare(dg.dirac(5), dg.dirac(1), (0, 2, 4))


def test_partition_validation():
    with pytest.raises(errors.InvalidPartition):
        dg.new_partition((1,))
    with pytest.raises(errors.InvalidPartition):
        dg.new_partition((0, 2, 2))


def test_partition_from_identity_utility():
    part = dg.partition_from_utility(lambda x: x, 0, 1, 2)
    assert len(part.points) == 3
    assert part.points[0] == 0 and part.points[-1] == 1
    assert abs(part.points[1] - 0.5) <= QUANTILE_TOL


def test_partition_from_square_utility():
    part = dg.partition_from_utility(lambda x: x * x, 0, 1, 2)
    assert abs(part.points[1] - 0.5 ** 0.5) <= 1e-9


def test_partition_single_segment_has_no_interior_points():
    part = dg.partition_from_utility(lambda x: x, 0, 1, 1)
    assert part.points == (0, 1)


def test_partition_from_decreasing_utility_rejected():
    with pytest.raises(errors.NotMonotone):
        dg.partition_from_utility(lambda x: -x, 0, 1, 2)


def test_json_round_trip_exact():
    P = dg.new_distribution([1, F(7, 2)], [F(1, 3), F(2, 3)])
    obj = dg.distribution_to_json(P)
    assert obj["atoms"] == [1, "7/2"]
    assert obj["masses"] == ["1/3", "2/3"]
    assert dg.distribution_from_json(obj) == P


def test_json_accepts_plain_numbers():
    P = dg.distribution_from_json({"atoms": [1, 2], "masses": [0.5, 0.5]})
    assert P.atoms == (1, 2)
