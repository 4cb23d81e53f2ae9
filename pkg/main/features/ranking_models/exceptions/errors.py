"""
Custom exceptions for the ranking_models feature.
"""

class RankingModelError(Exception):
    """Base exception for all Mallows / Plackett-Luce model errors."""
    pass

class InvalidModelError(RankingModelError, ValueError):
    """Raised when model parameters violate their invariants (e.g. theta > THETA_MAX)."""
    pass

class InvalidPairError(RankingModelError, ValueError):
    """Raised when a pairwise marginal is requested for i == j or an unknown label."""
    pass

class FitError(RankingModelError, ValueError):
    """Raised when a model cannot be fitted (empty input or mixed label counts)."""
    pass
