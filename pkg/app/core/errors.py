"""Exceptions raised by the conformal-blocks core.

Every error is a ``CBlocksError`` so callers (the CLI, the verification
harness) can catch the whole family at once.
"""


class CBlocksError(Exception):
    """Base class for all domain errors."""


class MalformedInput(CBlocksError):
    pass


class EmptyWeights(CBlocksError):
    pass


class NegativeWeight(CBlocksError):
    pass


class OddWeightSum(CBlocksError):
    pass


class InvalidLevel(CBlocksError):
    pass


class WeightExceedsLevel(CBlocksError):
    pass


class ArityError(CBlocksError):
    """An operation defined for a fixed number of weights got another number."""


class ArityMismatch(CBlocksError):
    """Two bundles that must live on the same M_0,n do not."""


class DegenerateSum(CBlocksError):
    pass


class OddSubset(CBlocksError):
    pass


class TooFewPoints(CBlocksError):
    pass


class PartitionMismatch(CBlocksError):
    pass


class InvalidBoundaryIndex(CBlocksError):
    pass


class InconsistentSystem(CBlocksError):
    """The F-curve system has no solution in the requested basis."""


class SingularBasis(CBlocksError):
    """The boundary subsets are not independent against the F-curves."""


class BasisUnavailable(CBlocksError):
    pass


class RankNotOne(CBlocksError):
    pass


class StabRankBelowMaxWeight(CBlocksError):
    pass
