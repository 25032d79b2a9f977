"""Game data model and structural transformations.

Three game flavors share the bimatrix shape: scalar payoffs, fixed-length
vector payoffs, and distribution payoffs.  Matrices are tuples of row
tuples.  All indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import errors
from ._numeric import MASS_SUM_TOL, all_exact, is_exact
from .dist import DiscreteDistribution, dirac, merge_weighted


@dataclass(frozen=True)
class BimatrixGame:
    A: tuple
    B: tuple
    zero_sum: bool = False


@dataclass(frozen=True)
class VectorBimatrixGame:
    A: tuple
    B: tuple
    dim: int


@dataclass(frozen=True)
class DistributionBimatrixGame:
    """Payoff cells are DiscreteDistribution values.

    zero_sum means both players receive the same distribution but rank
    outcomes in reverse, so A and B coincide cellwise.
    """

    A: tuple
    B: tuple
    zero_sum: bool = False


@dataclass(frozen=True)
class MixedProfile:
    x: tuple
    y: tuple


def _freeze_matrix(M) -> tuple:
    rows = tuple(tuple(row) for row in M)
    if not rows or not rows[0]:
        raise errors.DimensionMismatch("matrix must be non-empty")
    w = len(rows[0])
    for row in rows:
        if len(row) != w:
            raise errors.DimensionMismatch("matrix rows must have equal length")
    return rows


def _neg_close(a, b) -> bool:
    if is_exact(a) and is_exact(b):
        return a == -b
    return abs(float(a) + float(b)) <= MASS_SUM_TOL


def new_bimatrix(A, B=None, zero_sum: bool = False) -> BimatrixGame:
    """Build a scalar bimatrix game. With zero_sum and no B, B = -A."""
    Af = _freeze_matrix(A)
    if zero_sum and B is None:
        Bf = tuple(tuple(-v for v in row) for row in Af)
    else:
        if B is None:
            raise errors.DimensionMismatch("B is required unless zero_sum")
        Bf = _freeze_matrix(B)
    if len(Af) != len(Bf) or len(Af[0]) != len(Bf[0]):
        raise errors.DimensionMismatch("A and B must have the same shape")
    if zero_sum:
        for ra, rb in zip(Af, Bf):
            for a, b in zip(ra, rb):
                if not _neg_close(a, b):
                    raise errors.NotZeroSum(f"cell {a} vs {b} violates B = -A")
    return BimatrixGame(Af, Bf, zero_sum)


def new_vector_game(A, B, dim: int | None = None) -> VectorBimatrixGame:
    """Build a vector-payoff game; every cell must have the same length."""
    Af = tuple(tuple(tuple(cell) for cell in row) for row in A)
    Bf = tuple(tuple(tuple(cell) for cell in row) for row in B)
    if not Af or not Af[0]:
        raise errors.DimensionMismatch("matrix must be non-empty")
    if len(Af) != len(Bf) or len(Af[0]) != len(Bf[0]):
        raise errors.DimensionMismatch("A and B must have the same shape")
    d = dim if dim is not None else len(Af[0][0])
    for M in (Af, Bf):
        for row in M:
            if len(row) != len(Af[0]):
                raise errors.DimensionMismatch("matrix rows must have equal length")
            for cell in row:
                if len(cell) != d:
                    raise errors.DimensionMismatch(
                        f"cell has dimension {len(cell)}, expected {d}"
                    )
    return VectorBimatrixGame(Af, Bf, d)


def new_distribution_game(A, B=None, zero_sum: bool = False) -> DistributionBimatrixGame:
    """Build a distribution-payoff game. zero_sum shares A cellwise."""
    Af = _freeze_matrix(A)
    Bf = Af if (zero_sum and B is None) else _freeze_matrix(B if B is not None else A)
    if len(Af) != len(Bf) or len(Af[0]) != len(Bf[0]):
        raise errors.DimensionMismatch("A and B must have the same shape")
    for M in (Af, Bf):
        for row in M:
            for cell in row:
                if not isinstance(cell, DiscreteDistribution):
                    raise errors.DimensionMismatch("cells must be distributions")
    if zero_sum and Af is not Bf:
        for ra, rb in zip(Af, Bf):
            for a, b in zip(ra, rb):
                if a != b:
                    raise errors.NotZeroSum("zero_sum requires A = B cellwise")
    return DistributionBimatrixGame(Af, Bf, zero_sum)


def shape(G) -> tuple:
    return (len(G.A), len(G.A[0]))


def new_profile(x: Sequence, y: Sequence) -> MixedProfile:
    """Pair of probability vectors; entries >= 0, each summing to 1."""
    for v in (x, y):
        if len(v) == 0:
            raise errors.WeightsNotSimplex("empty strategy vector")
        if any(w < 0 for w in v):
            raise errors.WeightsNotSimplex("negative strategy weight")
        total = sum(v)
        if all_exact(list(v)):
            if total != 1:
                raise errors.WeightsNotSimplex(f"weights sum to {total}")
        elif abs(float(total) - 1.0) > MASS_SUM_TOL:
            raise errors.WeightsNotSimplex(f"weights sum to {float(total)!r}")
    return MixedProfile(tuple(x), tuple(y))


def pure_profile(i: int, j: int, n1: int, n2: int) -> MixedProfile:
    """Profile playing row i and column j with certainty."""
    if not (0 <= i < n1 and 0 <= j < n2):
        raise errors.IndexOutOfRange(f"pure strategy ({i}, {j}) outside {n1}x{n2}")
    return MixedProfile(
        tuple(1 if t == i else 0 for t in range(n1)),
        tuple(1 if t == j else 0 for t in range(n2)),
    )


def projection(G: VectorBimatrixGame, i: int) -> BimatrixGame:
    """Scalar game of coordinate i of every payoff vector.

    The result is flagged zero_sum when the projected B happens to be
    the exact negation of the projected A.
    """
    if not (0 <= i < G.dim):
        raise errors.IndexOutOfRange(f"coordinate {i} outside 0..{G.dim - 1}")
    A = tuple(tuple(cell[i] for cell in row) for row in G.A)
    B = tuple(tuple(cell[i] for cell in row) for row in G.B)
    zs = all(
        _neg_close(a, b)
        for ra, rb in zip(A, B)
        for a, b in zip(ra, rb)
    )
    return BimatrixGame(A, B, zs)


def top_projection(G: VectorBimatrixGame) -> BimatrixGame:
    return projection(G, G.dim - 1)


def _clean_indices(idx: Sequence[int], n: int, what: str) -> tuple:
    if len(idx) == 0:
        raise errors.EmptyIndexSet(f"empty {what} index set")
    out = sorted(set(idx))
    if out[0] < 0 or out[-1] >= n:
        raise errors.IndexOutOfRange(f"{what} index outside 0..{n - 1}")
    return tuple(out)


def subgame(G, I: Sequence[int], J: Sequence[int]):
    """Restrict any game type to rows I and columns J (sorted, deduped)."""
    n1, n2 = shape(G)
    I = _clean_indices(I, n1, "row")
    J = _clean_indices(J, n2, "column")
    A = tuple(tuple(G.A[i][j] for j in J) for i in I)
    B = tuple(tuple(G.B[i][j] for j in J) for i in I)
    if isinstance(G, VectorBimatrixGame):
        return VectorBimatrixGame(A, B, G.dim)
    if isinstance(G, DistributionBimatrixGame):
        return DistributionBimatrixGame(A, B, G.zero_sum)
    return BimatrixGame(A, B, G.zero_sum)


def common_support(G: DistributionBimatrixGame) -> tuple:
    """Sorted union of every atom appearing in any payoff cell."""
    atoms = set()
    for M in (G.A, G.B):
        for row in M:
            for cell in row:
                atoms.update(cell.atoms)
    return tuple(sorted(atoms))


def to_probability_vector_game(G: DistributionBimatrixGame) -> VectorBimatrixGame:
    """Replace each cell by its mass vector over the common support.

    Requires the common support to sit inside [1, oo) so the vector
    game's RLEX order mirrors the tail order.  In the zero-sum case
    player 2's vectors are negated: both players then maximize RLEX.
    """
    supp = common_support(G)
    if supp[0] < 1:
        raise errors.SupportBelowOne(f"smallest payoff atom {supp[0]} is below 1")

    def vec(P: DiscreteDistribution) -> tuple:
        f = dict(zip(P.atoms, P.masses))
        return tuple(f.get(v, 0) for v in supp)

    A = tuple(tuple(vec(cell) for cell in row) for row in G.A)
    if G.zero_sum:
        B = tuple(tuple(tuple(-c for c in v) for v in row) for row in A)
    else:
        B = tuple(tuple(vec(cell) for cell in row) for row in G.B)
    return VectorBimatrixGame(A, B, len(supp))


def mixed_payoff(G, p: MixedProfile, player: int):
    """Expected payoff of a mixed profile for one player.

    Scalar games give x^T M y, vector games evaluate coordinatewise,
    distribution games return the mixture weighted by x_i * y_j.
    """
    n1, n2 = shape(G)
    if len(p.x) != n1 or len(p.y) != n2:
        raise errors.DimensionMismatch(
            f"profile ({len(p.x)}, {len(p.y)}) does not fit {n1}x{n2} game"
        )
    if player not in (1, 2):
        raise ValueError("player must be 1 or 2")
    M = G.A if player == 1 else G.B
    if isinstance(G, BimatrixGame):
        return sum(
            p.x[i] * p.y[j] * M[i][j]
            for i in range(n1) for j in range(n2)
            if p.x[i] != 0 and p.y[j] != 0
        )
    if isinstance(G, VectorBimatrixGame):
        out = [0] * G.dim
        for i in range(n1):
            if p.x[i] == 0:
                continue
            for j in range(n2):
                if p.y[j] == 0:
                    continue
                w = p.x[i] * p.y[j]
                cell = M[i][j]
                for k in range(G.dim):
                    out[k] = out[k] + w * cell[k]
        return tuple(out)
    components = [
        (p.x[i] * p.y[j], M[i][j])
        for i in range(n1) for j in range(n2)
        if p.x[i] != 0 and p.y[j] != 0
    ]
    return merge_weighted(components)


def from_real_game(G: BimatrixGame) -> DistributionBimatrixGame:
    """Embed a scalar game by replacing each value with a point mass.

    Emitted with zero_sum=False even for zero-sum input: the embedded
    payoffs delta_a and delta_{-a} differ, and the shared-payoff
    zero-sum notion for distribution games does not apply.
    """
    A = tuple(tuple(dirac(v) for v in row) for row in G.A)
    B = tuple(tuple(dirac(v) for v in row) for row in G.B)
    return DistributionBimatrixGame(A, B, False)
