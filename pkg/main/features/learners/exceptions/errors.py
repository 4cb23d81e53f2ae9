"""
Custom exceptions for the learners feature.
"""

class LearnerError(Exception):
    """Base exception for all label-ranker training and prediction errors."""
    pass

class InvalidDatasetError(LearnerError, ValueError):
    """Raised when a dataset violates its invariants (ragged rankings, non-finite features...)."""
    pass

class InvalidLearnerConfigError(LearnerError, ValueError):
    """Raised when k or the ensemble size is not a positive integer."""
    pass

class NeighborCountError(LearnerError, ValueError):
    """Raised when more neighbors are requested than there are training instances."""
    pass

class FeatureDimensionError(LearnerError, ValueError):
    """Raised when a query vector does not have one value per feature."""
    pass
