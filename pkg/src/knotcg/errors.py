"""Exception hierarchy.

Every domain error derives from :class:`KnotCGError`, so callers (and the
command line front end) can catch the whole family at once.
"""


class KnotCGError(ValueError):
    pass


# core_forms
class OddSize(KnotCGError):
    pass


class NonUnimodularSkewPart(KnotCGError):
    pass


class HeightTooLargeForBudget(KnotCGError):
    pass


class ZeroPolynomial(KnotCGError):
    pass


class NotCoprime(KnotCGError):
    pass


class HypothesisViolated(KnotCGError):
    pass


class SplitFailed(KnotCGError):
    """Raised when a metabolizer does not split although it must."""


# signature_profiles
class AsymmetricJumps(KnotCGError):
    pass


class OutOfRange(KnotCGError):
    pass


class RootIsolationFailure(KnotCGError):
    pass


# branched_covers
class ConstantPolynomial(KnotCGError):
    pass


class InfiniteHomology(KnotCGError):
    pass


# casson_gordon
class MNotInvertible(KnotCGError):
    pass


class SNotCoprime(KnotCGError):
    pass


class StepHitsZero(KnotCGError):
    pass


class HypothesisFailed(KnotCGError):
    pass


class MixedQ(KnotCGError):
    pass


# twisted_doubles
class BadPrime(KnotCGError):
    pass


class NoWitness(KnotCGError):
    pass


class DuplicateTwist(KnotCGError):
    pass
