"""Exact equilibrium computation for ordinary bimatrix games, then the
same game handed to fictitious play."""

from distgames.game_core import new_bimatrix
from distgames.solve_real import (
    fictitious_play,
    pure_equilibria,
    support_enumeration,
    zero_sum_value,
)

RPS = [[0, -1, 1], [1, 0, -1], [-1, 1, 0]]


def main():
    G = new_bimatrix(RPS, zero_sum=True)
    print("rock-paper-scissors, pure equilibria:", pure_equilibria(G))

    out = support_enumeration(G)
    for rep in out.equilibria:
        print("mixed equilibrium:", rep.profile.x, "vs", rep.profile.y,
              "payoffs", rep.payoffs)
    print("game value:", zero_sum_value(G))
    print()

    print("fictitious play, empirical mixtures every 2000 rounds:")
    for rec in fictitious_play(G, 10_000, record_every=2000):
        x = tuple(round(float(v), 4) for v in rec.x)
        print(f"  round {rec.round:5d}  x = {x}  "
              f"payoff = {float(rec.payoff1):+.5f}")

    dilemma = new_bimatrix([[-1, -5], [0, -4]], [[-1, 0], [-5, -4]])
    print()
    print("a dominant-strategy game:", pure_equilibria(dilemma))
    trace = fictitious_play(dilemma, 500)
    print("fictitious play ends at x =",
          tuple(round(float(v), 3) for v in trace[-1].x))


if __name__ == "__main__":
    main()
