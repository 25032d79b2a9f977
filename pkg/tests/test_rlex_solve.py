"""Lexicographic equilibrium verification and the existence decision,
including the distribution-game pipeline."""

from fractions import Fraction as F

import distgames as dg
from distgames.rlex_solve import EQUILIBRIA, INDETERMINATE, NO_EQUILIBRIUM

import oracles


def _profile(x, y):
    return dg.new_profile(x, y)


class TestVerify:
    def test_top_equilibrium_fails_full_check(self, vector_game_2x2):
        p = _profile(oracles.TWO_BY_TWO_TOP_X, oracles.TWO_BY_TWO_TOP_Y)
        assert not dg.verify_rlex_equilibrium(vector_game_2x2, p)

    def test_coordination_profile_verified(self, coordination_game):
        p = _profile(oracles.COORDINATION_EQ_X, oracles.COORDINATION_EQ_Y)
        assert dg.verify_rlex_equilibrium(coordination_game, p)

    def test_degenerate_profile_rejected(self, degenerate_game):
        x, y = oracles.DEGENERATE_CAND_1
        assert not dg.verify_rlex_equilibrium(degenerate_game, _profile(x, y))

    def test_deviation_within_support_keeps_verdict(self, coordination_game):
        # mixing differently over the first two rows changes nothing in
        # either coordinate, so the equilibrium persists
        p = _profile((F(3, 10), F(7, 10), 0), oracles.COORDINATION_EQ_Y)
        u_eq = dg.mixed_payoff(
            coordination_game,
            _profile(oracles.COORDINATION_EQ_X, oracles.COORDINATION_EQ_Y),
            1,
        )
        u_dev = dg.mixed_payoff(coordination_game, p, 1)
        assert u_dev == u_eq


class TestDecide:
    def test_reference_game_has_no_equilibrium(self, vector_game_2x2):
        dec = dg.decide_rlex_equilibria(vector_game_2x2)
        assert dec.status == NO_EQUILIBRIUM
        assert dec.equilibria == ()
        assert not dec.degenerate
        # the unique top-game candidate was checked and failed
        assert len(dec.candidates_checked) == 1
        profile, ok = dec.candidates_checked[0]
        assert profile.x == oracles.TWO_BY_TWO_TOP_X
        assert not ok

    def test_coordination_game_equilibrium_found(self, coordination_game):
        dec = dg.decide_rlex_equilibria(coordination_game)
        assert dec.status == EQUILIBRIA
        profiles = {(rep.profile.x, rep.profile.y) for rep in dec.equilibria}
        assert (oracles.COORDINATION_EQ_X, oracles.COORDINATION_EQ_Y) in profiles

    def test_coordination_payoff_vectors_reported(self, coordination_game):
        dec = dg.decide_rlex_equilibria(coordination_game)
        rep = next(
            r for r in dec.equilibria
            if r.profile.x == oracles.COORDINATION_EQ_X
        )
        assert rep.payoffs[0] == (F(3, 2), F(3, 2))
        assert rep.payoffs[1] == (F(3, 2), F(-3, 2))

    def test_degenerate_game_indeterminate(self, degenerate_game):
        dec = dg.decide_rlex_equilibria(degenerate_game)
        assert dec.status == INDETERMINATE
        assert dec.degenerate
        assert dec.equilibria == ()
        assert all(not ok for _, ok in dec.candidates_checked)
        checked_x = {p.x for p, _ in dec.candidates_checked}
        assert oracles.DEGENERATE_CAND_1[0] in checked_x


class TestConditionChecks:
    def test_all_coordinates_fails_for_coordination_game(self, coordination_game):
        # the bottom coordinate alone would push both players to the
        # third strategy, so the blanket condition cannot certify
        p = _profile(oracles.COORDINATION_EQ_X, oracles.COORDINATION_EQ_Y)
        assert not dg.check_all_coordinates_condition(coordination_game, p)

    def test_all_coordinates_certifies_aligned_game(self):
        # both coordinates share the pure equilibrium at (0, 0)
        A = [[(2, 2), (0, 0)], [(0, 0), (1, 1)]]
        B = [[(2, 2), (0, 0)], [(0, 0), (1, 1)]]
        G = dg.new_vector_game(A, B, 2)
        p = _profile((1, 0), (1, 0))
        assert dg.check_all_coordinates_condition(G, p)
        assert dg.verify_rlex_equilibrium(G, p)

    def test_subgame_condition_holds_for_coordination_game(self, coordination_game):
        p = _profile(oracles.COORDINATION_EQ_X, oracles.COORDINATION_EQ_Y)
        assert dg.check_subgame_condition(coordination_game, p)

    def test_subgame_condition_holds_on_degenerate_candidate(self, degenerate_game):
        # the restricted low game is all zeros, so the condition is
        # satisfied even though the profile is not an equilibrium
        x, y = oracles.DEGENERATE_CAND_1
        assert dg.check_subgame_condition(degenerate_game, _profile(x, y))
        assert not dg.verify_rlex_equilibrium(degenerate_game, _profile(x, y))


class TestDistributionPipeline:
    def test_isomorphic_distribution_game_also_empty(self, vector_game_2x2):
        # rows of the reference game reread as mass vectors on {1,2,3}
        d = dg.new_distribution
        A = [
            [
                d([1, 2, 3], list(cell))
                for cell in row
            ]
            for row in oracles.TWO_BY_TWO_VECTOR_A
        ]
        G = dg.new_distribution_game(A, zero_sum=True)
        dec = dg.decide_tail_equilibria(G)
        assert dec.status == NO_EQUILIBRIUM
        vdec = dg.decide_rlex_equilibria(dg.to_probability_vector_game(G))
        assert vdec.status == dec.status

    def test_mixed_candidate_rejected_by_middle_coordinate(self):
        G = oracles.small_distribution_game()
        dec = dg.decide_tail_equilibria(G)
        assert dec.status == NO_EQUILIBRIUM
        assert not dec.degenerate
        assert len(dec.candidates_checked) == 1
        cand, ok = dec.candidates_checked[0]
        assert cand.x == (F(1, 3), F(2, 3))
        assert not ok

    def test_strict_saddle_survives(self):
        G = oracles.saddle_distribution_game()
        dec = dg.decide_tail_equilibria(G)
        assert dec.status == EQUILIBRIA
        assert not dec.degenerate
        rep = dec.equilibria[0]
        assert rep.pure
        assert rep.profile.x == (1, 0)
        assert rep.profile.y == (0, 1)
        # the reported payoff is the saddle cell's mass vector
        assert rep.payoffs[0] == (0, F(3, 5), F(2, 5))

    def test_constant_dirac_game_every_profile_equilibrium(self):
        A = [[dg.dirac(2), dg.dirac(2)], [dg.dirac(2), dg.dirac(2)]]
        G = dg.new_distribution_game(A, zero_sum=True)
        V = dg.to_probability_vector_game(G)
        h = F(1, 2)
        for p in (dg.pure_profile(0, 1, 2, 2), dg.new_profile([h, h], [h, h])):
            assert dg.verify_rlex_equilibrium(V, p)
