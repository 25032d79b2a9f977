"""Monte Carlo estimators against their closed-form references."""

from fractions import Fraction as F

import numpy as np
import pytest

import distgames as dg


class TestClosedForms:
    def test_zero_sum_small_values(self):
        assert dg.formula_pure_zero_sum(2, 2) == F(2, 3)
        assert dg.formula_pure_zero_sum(3, 3) == F(3, 10)
        assert dg.formula_pure_zero_sum(1, 1) == 1

    def test_bimatrix_small_values(self):
        assert dg.formula_pure_bimatrix(2, 2) == F(7, 8)
        assert dg.formula_pure_bimatrix(1, 1) == 1
        assert abs(float(dg.formula_pure_bimatrix(3, 3)) - 0.786) <= 5e-4


class TestRandomGames:
    def test_deterministic_for_seeded_rng(self):
        g1 = dg.random_bimatrix(3, 3, True, np.random.default_rng(5))
        g2 = dg.random_bimatrix(3, 3, True, np.random.default_rng(5))
        assert g1.A == g2.A

    def test_entries_distinct(self):
        G = dg.random_bimatrix(100, 100, False, np.random.default_rng(0))
        entries = [v for row in G.A for v in row]
        assert len(set(entries)) == len(entries)

    def test_zero_sum_negation_exact(self):
        G = dg.random_bimatrix(4, 4, True, np.random.default_rng(1))
        for ra, rb in zip(G.A, G.B):
            for a, b in zip(ra, rb):
                assert b == -a


class TestPureProbability:
    def test_single_cell_always_hits(self):
        s = dg.estimate_pure_probability(1, 1, False, 100, seed=0)
        assert s.hits == 100
        assert s.estimate == 1.0
        assert s.reference == 1.0

    def test_deterministic(self):
        s1 = dg.estimate_pure_probability(2, 2, True, 500, seed=7)
        s2 = dg.estimate_pure_probability(2, 2, True, 500, seed=7)
        assert s1 == s2

    def test_zero_sum_estimate_near_reference(self):
        s = dg.estimate_pure_probability(2, 2, True, 2000, seed=0)
        assert s.reference == pytest.approx(2 / 3)
        assert abs(s.estimate - s.reference) <= 2 * s.ci95_halfwidth

    def test_bimatrix_estimate_near_reference(self):
        s = dg.estimate_pure_probability(2, 2, False, 2000, seed=0)
        assert s.reference == pytest.approx(7 / 8)
        assert abs(s.estimate - s.reference) <= 2 * s.ci95_halfwidth

    def test_ci_formula(self):
        s = dg.estimate_pure_probability(3, 3, True, 400, seed=2)
        want = 1.96 * (s.estimate * (1 - s.estimate) / s.trials) ** 0.5
        assert s.ci95_halfwidth == pytest.approx(want)


class TestRlexProbability:
    def test_single_cell_always_equilibrium(self):
        rlex, pure_top, nonpure, indet = dg.estimate_rlex_probability(
            1, 1, 2, False, 100, seed=0
        )
        assert rlex.estimate == 1.0
        assert pure_top.estimate == 1.0
        assert nonpure == 0
        assert indet == 0

    def test_existence_tracks_top_game_pure_rate(self):
        rlex, pure_top, nonpure, indet = dg.estimate_rlex_probability(
            2, 2, 3, False, 400, seed=1
        )
        assert nonpure == 0
        assert indet == 0
        assert rlex.trials == pure_top.trials == 400
        joint = rlex.ci95_halfwidth + pure_top.ci95_halfwidth
        assert abs(rlex.estimate - pure_top.estimate) <= joint
        assert rlex.reference == pure_top.reference
        assert rlex.reference == pytest.approx(7 / 8)

    def test_zero_sum_uses_zero_sum_reference(self):
        rlex, pure_top, _, _ = dg.estimate_rlex_probability(
            2, 2, 2, True, 300, seed=4
        )
        assert rlex.reference == pytest.approx(2 / 3)
        assert abs(rlex.estimate - rlex.reference) <= 3 * rlex.ci95_halfwidth

    def test_dim_must_be_at_least_two(self):
        with pytest.raises(ValueError):
            dg.estimate_rlex_probability(2, 2, 1, False, 10, seed=0)


class TestCsv:
    def test_pure_row_leaves_vector_columns_empty(self):
        s = dg.estimate_pure_probability(2, 2, True, 200, seed=3)
        text = dg.mc_csv(2, 2, None, True, 3, s)
        header, row = text.strip().split("\n")
        assert header == (
            "m,n,dim,zero_sum,trials,seed,hits,estimate,ci95,"
            "reference,nonpure_found,indeterminate"
        )
        cells = row.split(",")
        assert cells[0] == "2"
        assert cells[2] == ""
        assert cells[3] == "true"
        assert cells[10] == "" and cells[11] == ""

    def test_rlex_row_fills_everything(self):
        rlex, _, nonpure, indet = dg.estimate_rlex_probability(
            2, 2, 2, False, 100, seed=5
        )
        text = dg.mc_csv(2, 2, 2, False, 5, rlex, nonpure, indet)
        row = text.strip().split("\n")[1].split(",")
        assert row[2] == "2"
        assert row[3] == "false"
        assert row[10] == "0"
        assert "" not in row

    def test_round_trip_stable(self):
        s = dg.estimate_pure_probability(2, 2, True, 200, seed=3)
        assert dg.mc_csv(2, 2, None, True, 3, s) == dg.mc_csv(2, 2, None, True, 3, s)
