"""Monte Carlo estimates of equilibrium-existence probabilities.

Random games get iid uniform(0,1) payoffs.  Closed-form existence
probabilities are available for pure equilibria of random scalar games,
and the lexicographic decision procedure is expected to agree with the
pure top-coordinate probability while never certifying a non-pure
equilibrium on continuously sampled payoffs; any such hit is treated as
a bug, not a discovery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from . import errors
from .game_core import BimatrixGame, new_bimatrix, new_vector_game, projection
from .rlex_solve import EQUILIBRIA, INDETERMINATE, decide_rlex_equilibria
from .solve_real import pure_equilibria

MC_CSV_HEADER = ("m,n,dim,zero_sum,trials,seed,hits,estimate,ci95,"
                 "reference,nonpure_found,indeterminate")


@dataclass(frozen=True)
class TrialSummary:
    trials: int
    hits: int
    estimate: float
    ci95_halfwidth: float
    reference: Optional[float]


def _summarize(hits: int, trials: int, reference: Optional[float]) -> TrialSummary:
    est = hits / trials
    ci = 1.96 * math.sqrt(est * (1 - est) / trials)
    return TrialSummary(trials, hits, est, ci, reference)


def formula_pure_zero_sum(m: int, n: int) -> Fraction:
    """Probability that a random m x n zero-sum game has a pure
    equilibrium: m! n! / (m+n-1)!."""
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    return Fraction(math.factorial(m) * math.factorial(n),
                    math.factorial(m + n - 1))


def formula_pure_bimatrix(m: int, n: int) -> Fraction:
    """Probability that a random m x n bimatrix game has a pure
    equilibrium (independent payoffs for the two players)."""
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    total = Fraction(0)
    for k in range(min(m, n) + 1):
        term = Fraction(math.factorial(k) * math.comb(m, k) * math.comb(n, k),
                        (m * n) ** k)
        total += term if k % 2 == 0 else -term
    return 1 - total


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    # one independent stream per trial, so results never depend on
    # execution order
    return np.random.default_rng((seed, trial))


def random_bimatrix(m: int, n: int, zero_sum: bool,
                    rng: np.random.Generator) -> BimatrixGame:
    """Scalar game with iid uniform(0,1) entries; the column player's
    matrix is the exact negation under zero_sum, independent otherwise."""
    A = [[float(v) for v in row] for row in rng.random((m, n))]
    if zero_sum:
        return new_bimatrix(A, zero_sum=True)
    B = [[float(v) for v in row] for row in rng.random((m, n))]
    return new_bimatrix(A, B)


def estimate_pure_probability(m: int, n: int, zero_sum: bool, trials: int,
                              seed: int) -> TrialSummary:
    """Fraction of random games holding at least one pure equilibrium,
    with the matching closed form attached as reference."""
    if trials < 1:
        raise ValueError("need trials >= 1")
    hits = 0
    for t in range(trials):
        G = random_bimatrix(m, n, zero_sum, _trial_rng(seed, t))
        if pure_equilibria(G):
            hits += 1
    ref = formula_pure_zero_sum(m, n) if zero_sum else formula_pure_bimatrix(m, n)
    return _summarize(hits, trials, float(ref))


def _random_vector_game(m: int, n: int, dim: int, zero_sum: bool,
                        rng: np.random.Generator):
    draws = rng.random((m, n, dim))
    A = [[tuple(float(v) for v in cell) for cell in row] for row in draws]
    if zero_sum:
        B = [[tuple(-e for e in cell) for cell in row] for row in A]
    else:
        draws2 = rng.random((m, n, dim))
        B = [[tuple(float(v) for v in cell) for cell in row] for row in draws2]
    return new_vector_game(A, B, dim)


def estimate_rlex_probability(m: int, n: int, dim: int, zero_sum: bool,
                              trials: int, seed: int
                              ) -> Tuple[TrialSummary, TrialSummary, int, int]:
    """Existence frequency of lexicographic equilibria in random vector
    games, next to the frequency of pure equilibria in the top
    coordinate alone.

    Returns (rlex summary, pure-top summary, number of trials where a
    verified equilibrium was non-pure, number of Indeterminate trials).
    Indeterminate trials count toward neither estimate; more than 0.1%
    of them aborts the run since that signals broken degeneracy
    detection rather than unlucky sampling.
    """
    if dim < 2:
        raise ValueError("need dim >= 2")
    if trials < 1:
        raise ValueError("need trials >= 1")
    rlex_hits = 0
    pure_top_hits = 0
    nonpure_found = 0
    indeterminate = 0
    for t in range(trials):
        G = _random_vector_game(m, n, dim, zero_sum, _trial_rng(seed, t))
        decision = decide_rlex_equilibria(G)
        if decision.status == INDETERMINATE:
            indeterminate += 1
            continue
        if decision.status == EQUILIBRIA:
            rlex_hits += 1
            if any(not rep.pure for rep in decision.equilibria):
                nonpure_found += 1
        if pure_equilibria(projection(G, dim - 1)):
            pure_top_hits += 1
    if indeterminate * 1000 > trials:
        raise errors.ExcessiveDegeneracy(
            f"{indeterminate} of {trials} trials were Indeterminate"
        )
    effective = trials - indeterminate
    ref = formula_pure_zero_sum(m, n) if zero_sum else formula_pure_bimatrix(m, n)
    return (_summarize(rlex_hits, effective, float(ref)),
            _summarize(pure_top_hits, effective, float(ref)),
            nonpure_found, indeterminate)


def _csv_num(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def mc_csv(m: int, n: int, dim: Optional[int], zero_sum: bool, seed: int,
           summary: TrialSummary, nonpure_found: Optional[int] = None,
           indeterminate: Optional[int] = None) -> str:
    """One-row CSV summary in the fixed column order; inapplicable
    columns stay empty."""
    row = [m, n, dim, zero_sum, summary.trials, seed, summary.hits,
           summary.estimate, summary.ci95_halfwidth, summary.reference,
           nonpure_found, indeterminate]
    return MC_CSV_HEADER + "\n" + ",".join(_csv_num(v) for v in row) + "\n"
