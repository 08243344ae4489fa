"""Exception hierarchy shared by the solver pipeline."""


class FrobeniusError(Exception):
    """Base class for all errors raised by this package."""


class InfiniteGapSet(FrobeniusError, ValueError):
    """The generators share a common factor, so infinitely many integers are gaps."""

    def __init__(self, d):
        super().__init__(f"infinite gap set (gcd={d})")
        self.gcd = d


class DegenerateVector(FrobeniusError):
    """A lattice vector lacks the one-positive/two-negative sign pattern."""


class InvalidSolutionBasis(FrobeniusError):
    """The three candidate basic vectors do not occupy three distinct sectors."""


class InternalInconsistency(FrobeniusError):
    """An identity that must hold on valid input was violated."""


class OracleLimitExceeded(FrobeniusError, ValueError):
    """A brute-force table would exceed the configured size limit."""
