"""Constructions showing how far moment comparisons can be pushed:
families whose cdfs cross forever, a mass shift that preserves the
moment order, and a pair whose moment sequences swap the lead
infinitely often, all with checkable certificates."""

from fractions import Fraction as F

from distgames.construct import (
    alternating_moment_pair,
    geometric_tail_family,
    shift_construction,
    verify_alternation_certificate,
    verify_cdf_alternation,
)


def main():
    fast = geometric_tail_family(2, 10)
    slow = geometric_tail_family(3, 10)
    print("family c=2 first atoms:", fast.atoms[:3])
    print("family c=3 first atoms:", slow.atoms[:3])
    print("cdfs alternate across the first 5 atoms:",
          verify_cdf_alternation(fast, slow, 5))
    print()

    atoms = [2 - F(1, k + 1) for k in range(1, 7)]
    masses = [F(1, 2) ** k for k in range(1, 7)]
    shifted, certs = shift_construction(atoms, masses, 2)
    print("shift construction on", len(atoms), "atoms:")
    print("  inserted leading atom:", shifted.atoms[0])
    for c in certs:
        print(f"  term {c.term}: c = {c.c} "
              f"(moment bound ok: {c.first_moment_ok})")
    print()

    x, y, cert = alternating_moment_pair(1, 2, 4)
    print("alternating moment pair, lead changes at orders",
          cert.k_indices)
    print("  directions:", cert.directions)
    print("  certificate verifies:",
          verify_alternation_certificate(x, y, cert))


if __name__ == "__main__":
    main()
