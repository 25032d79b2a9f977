"""Monte Carlo estimates of how often random games admit equilibria,
checked against the closed forms."""

from distgames.mc import (
    estimate_pure_probability,
    estimate_rlex_probability,
    formula_pure_bimatrix,
    formula_pure_zero_sum,
)

TRIALS = 5000


def main():
    for m, n in ((2, 2), (3, 3)):
        ref = formula_pure_zero_sum(m, n)
        s = estimate_pure_probability(m, n, True, TRIALS, seed=0)
        print(f"zero-sum {m}x{n}: estimate {s.estimate:.4f} "
              f"+- {s.ci95_halfwidth:.4f}, closed form {ref} = {float(ref):.4f}")

    ref = formula_pure_bimatrix(2, 2)
    s = estimate_pure_probability(2, 2, False, TRIALS, seed=0)
    print(f"bimatrix 2x2: estimate {s.estimate:.4f} "
          f"+- {s.ci95_halfwidth:.4f}, closed form {ref}")
    print()

    rlex, pure_top, nonpure, indet = estimate_rlex_probability(
        2, 2, 3, False, 2000, seed=0)
    print("2x2 games with 3-dimensional vector payoffs, 2000 trials:")
    print(f"  lexicographic equilibrium frequency: {rlex.estimate:.4f}")
    print(f"  pure equilibrium in top coordinate:  {pure_top.estimate:.4f}")
    print(f"  non-pure equilibria found: {nonpure} "
          f"(none are expected on continuous payoffs)")
    print(f"  indeterminate trials dropped: {indet}")


if __name__ == "__main__":
    main()
