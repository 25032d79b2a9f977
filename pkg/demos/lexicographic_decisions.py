"""The existence decision for games ranked by the reflected
lexicographic order, on three small vector games with three different
outcomes."""

from fractions import Fraction as F

from distgames.game_core import new_vector_game
from distgames.rlex_solve import decide_rlex_equilibria


def show(name, G):
    dec = decide_rlex_equilibria(G)
    print(f"{name}: {dec.status} (degenerate top game: {dec.degenerate})")
    for p, ok in dec.candidates_checked:
        print(f"  candidate x={p.x} y={p.y} verified={ok}")
    for rep in dec.equilibria:
        print(f"  equilibrium payoff (player 1): {rep.payoffs[0]}")
    print()


def main():
    t = F(1, 10)
    A = [[(1 * t, 8 * t, 1 * t), (1 * t, 7 * t, 2 * t)],
         [(6 * t, 1 * t, 3 * t), (8 * t, 1 * t, 1 * t)]]
    B = [[tuple(-v for v in cell) for cell in row] for row in A]
    show("mass-vector game with a mixed top candidate",
         new_vector_game(A, B, 3))

    A = [[(1, 1), (2, 2), (3, 3)],
         [(2, 2), (1, 1), (3, 3)],
         [(3, 0), (3, 0), (3, 3)]]
    B = [[(1, -1), (2, -2), (3, -3)],
         [(2, -2), (1, -1), (3, -3)],
         [(3, 0), (3, 0), (3, -3)]]
    show("coordination-flavoured game", new_vector_game(A, B))

    A = [[(0, 1), (0, 2), (0, -1)],
         [(0, 2), (0, 1), (0, -2)],
         [(1, 2), (1, 1), (1, -3)]]
    B = [[(0, 2), (0, 1), (0, 0)],
         [(0, 1), (0, 2), (0, 0)],
         [(-1, -1), (-1, -1), (-1, 0)]]
    show("game with a degenerate top projection", new_vector_game(A, B))


if __name__ == "__main__":
    main()
