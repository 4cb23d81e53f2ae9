"""
Custom exceptions for the rankings feature.
This allows the service layer (and other features) to catch specific errors.
"""

class RankingError(Exception):
    """Base exception for all ranking and relation errors."""
    pass

class DimensionMismatchError(RankingError, ValueError):
    """Raised when two objects over different label counts are combined."""
    pass

class InvalidRankingError(RankingError, ValueError):
    """Raised when a sequence is not a permutation of the label indices."""
    pass

class InvalidRelationError(RankingError, ValueError):
    """Raised when a relation violates irreflexivity, asymmetry or transitivity."""
    pass

class CyclicRelationError(InvalidRelationError):
    """Raised when an operation requires an acyclic relation but got a cycle."""
    pass

class EnumerationCapError(RankingError):
    """Raised when exhaustive enumeration is requested above the label-count cap."""
    pass
