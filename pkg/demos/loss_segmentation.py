"""From a game with distribution payoffs to a multi-objective segment
game, and on to Pareto-Nash equilibria via weighted scalarization."""

from fractions import Fraction as F

from distgames.dist import new_distribution
from distgames.game_core import new_distribution_game
from distgames.pareto import (
    pareto_minimal,
    pareto_nash,
    segment_game,
    sweep_csv,
    weight_sweep,
)


def main():
    d = new_distribution
    half = F(1, 2)
    A = [[d([1, 3], [half, half]), d([2, 3], [F(3, 5), F(2, 5)])],
         [d([1, 3], [F(3, 4), F(1, 4)]), d([1, 2, 3], [F(3, 10), F(4, 10), F(3, 10)])]]
    G = new_distribution_game(A, zero_sum=True)

    S = segment_game(G, (0, 2, 4))
    print("segment game cells (player 1, negated segment losses):")
    for row in S.A:
        print("  ", row)
    print()

    vs = [(4, 2, 4), (2, 2, 2), (0, 0, 5)]
    print("pareto-minimal loss vectors of", vs, "->", pareto_minimal(vs))
    print()

    out = pareto_nash(S, (0, 1), (0, 1))
    print("unit weight on the top segment:")
    for rep in out.equilibria:
        print("  equilibrium:", rep.profile.x, "vs", rep.profile.y)
    print()

    print("random weight sweep (4 samples):")
    print(sweep_csv(S, weight_sweep(S, 4, seed=7)))


if __name__ == "__main__":
    main()
