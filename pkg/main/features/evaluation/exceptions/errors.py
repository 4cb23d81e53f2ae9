"""
Custom exceptions for the evaluation feature.
"""

class EvaluationError(Exception):
    """Base exception for all sweep and cross-validation errors."""
    pass

class InvalidGridError(EvaluationError, ValueError):
    """Raised when a threshold grid is empty, unordered, or leaves [0.5, 1)."""
    pass

class FoldError(EvaluationError, ValueError):
    """Raised when the fold count does not fit the dataset (folds < 2 or folds > N)."""
    pass
