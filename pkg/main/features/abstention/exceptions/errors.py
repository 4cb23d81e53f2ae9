"""
Custom exceptions for the abstention feature.
"""

class AbstentionError(Exception):
    """Base exception for all partial-order prediction errors."""
    pass

class InvalidThresholdError(AbstentionError, ValueError):
    """Raised when a threshold lies outside [0.5, 1)."""
    pass

class PartialOrderViolationError(AbstentionError):
    """
    Raised when thresholding model marginals does not give a partial order.
    Model-derived relations always threshold to partial orders, so this
    signals a bug or a numerical pathology, never a recoverable condition.
    """
    pass

class InfeasibleRelationError(AbstentionError):
    """
    Raised when no threshold below 1 makes a valued relation acyclic, i.e.
    it contains a cycle of certain (degree 1) preferences.
    """
    pass
