"""Walk through the comparison operations on finitely-supported
distributions: expectation, usual stochastic order, the tail order, and
the partition-tweakable order."""

from fractions import Fraction as F

from distgames.dist import (
    compare_expectation,
    compare_usual_stochastic,
    new_distribution,
    partition_from_utility,
    tail_compare,
    tweakable_compare,
)


def main():
    lottery = new_distribution([0, 10], [F(9, 10), F(1, 10)])
    steady = new_distribution([1], [1])
    print("lottery:", lottery.atoms, lottery.masses)
    print("steady :", steady.atoms, steady.masses)
    print("by expectation:", compare_expectation(lottery, steady).name)
    print("usual stochastic order:",
          compare_usual_stochastic(lottery, steady).name)
    print()

    risky = new_distribution([1, 4], [F(1, 2), F(1, 2)])
    middling = new_distribution([2, 3], [F(1, 2), F(1, 2)])
    print("same mean, different spread:")
    print("  usual order:", compare_usual_stochastic(risky, middling).name)
    print("  tail order :", tail_compare(risky, middling).name)
    print("the tail order is total, so crossing cdfs still get a verdict")
    print()

    # A coarse partition can hide the difference a finer one reveals.
    coarse = (0, 4)
    fine = (0, 2, 4)
    print("tweakable order of risky vs middling:")
    print("  partition", coarse, "->",
          tweakable_compare(risky, middling, coarse).name)
    print("  partition", fine, "->",
          tweakable_compare(risky, middling, fine).name)
    print()

    cuts = partition_from_utility(lambda v: v * v, 0, 4, 4)
    print("quantile cuts of u(v)=v^2 on [0,4]:",
          tuple(round(c, 4) for c in cuts.points))


if __name__ == "__main__":
    main()
