from __future__ import annotations

import math
from dataclasses import dataclass, field

from ...rankings.domain.models import Ranking
from ..config import settings
from ..exceptions.errors import InvalidModelError


@dataclass(frozen=True)
class MallowsModel:
    """
    Mallows model under Kendall's distance: center ranking pi0 and spread
    theta. The normalizer phi(theta) is computed on demand, never stored.
    """
    center: Ranking
    theta: float

    def __post_init__(self):
        theta = float(self.theta)
        if not math.isfinite(theta) or theta < 0.0:
            raise InvalidModelError(f"Mallows spread must be a finite theta >= 0, got {self.theta}.")
        if theta > settings.THETA_MAX:
            raise InvalidModelError(f"Mallows spread {theta} exceeds the cap {settings.THETA_MAX}.")
        object.__setattr__(self, "theta", theta)

    @property
    def M(self) -> int:
        return self.center.M


@dataclass(frozen=True)
class PLModel:
    """
    Plackett-Luce model with positive weights v. Weights are normalised to
    sum to one on construction (the model is scale invariant).
    """
    weights: tuple[float, ...]

    def __post_init__(self):
        weights = tuple(float(v) for v in self.weights)
        if len(weights) == 0:
            raise InvalidModelError("A Plackett-Luce model needs at least one weight.")
        if not all(math.isfinite(v) and v > 0.0 for v in weights):
            raise InvalidModelError(f"Plackett-Luce weights must be finite and strictly positive, got {weights}.")
        total = math.fsum(weights)
        object.__setattr__(self, "weights", tuple(v / total for v in weights))

    @property
    def M(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class FitReport:
    """Diagnostics of a maximum-likelihood fit."""
    iterations: int
    converged: bool
    log_likelihood: float
    boundary_hit: bool  # theta capped, or a weight clamped to the positivity floor
    log_likelihood_trace: tuple[float, ...] = field(default=(), repr=False)
