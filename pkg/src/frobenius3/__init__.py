"""Frobenius numbers and gap counts for two or three generators via 2-D lattice reduction."""

from .closed_forms import frobenius3, sylvester
from .errors import (DegenerateVector, FrobeniusError, InfiniteGapSet, InternalInconsistency,
                     InvalidSolutionBasis, OracleLimitExceeded)
from .solution_basis import FrobeniusData, SolutionBasis
from .solver import Solution, solve, solve_oracle

__all__ = [
    "DegenerateVector", "FrobeniusData", "FrobeniusError", "InfiniteGapSet",
    "InternalInconsistency", "InvalidSolutionBasis", "OracleLimitExceeded",
    "Solution", "SolutionBasis", "frobenius3", "solve", "solve_oracle", "sylvester",
]
