"""Exception types raised across the package.

Everything derives from DistGamesError so callers can catch the whole
family with one clause.  Names describe the violated precondition.
"""


class DistGamesError(Exception):
    pass


# distribution construction / validation

class EmptySupport(DistGamesError):
    pass


class NonPositiveMass(DistGamesError):
    pass


class MassSumNotOne(DistGamesError):
    pass


class DuplicateAtom(DistGamesError):
    pass


class WeightsNotSimplex(DistGamesError):
    pass


class InvalidPartition(DistGamesError):
    pass


# moment sequences

class TooShort(DistGamesError):
    pass


# order comparisons

class DimensionMismatch(DistGamesError):
    pass


class SupportBelowOne(DistGamesError):
    pass


class SupportOutsidePartition(DistGamesError):
    pass


# utility-quantile partitioning

class NotMonotone(DistGamesError):
    pass


class NoConvergence(DistGamesError):
    pass


# game construction

class EmptyIndexSet(DistGamesError):
    pass


class IndexOutOfRange(DistGamesError):
    pass


class NotZeroSum(DistGamesError):
    pass


class NoEquilibriumFound(DistGamesError):
    pass


class NotTopCoordinateEquilibrium(DistGamesError):
    pass


# counterexample constructions

class OverlappingAtoms(DistGamesError):
    pass


class MassesNotDecreasing(DistGamesError):
    pass


class AtomsNotIncreasing(DistGamesError):
    pass


class SearchBudgetExceeded(DistGamesError):
    pass


# monte carlo

class ExcessiveDegeneracy(DistGamesError):
    pass
