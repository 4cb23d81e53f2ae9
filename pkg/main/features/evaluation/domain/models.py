from __future__ import annotations

from dataclasses import dataclass, field

from ...abstention.domain.models import Threshold
from ...learners.domain.models import Method
from ..exceptions.errors import EvaluationError, InvalidGridError


@dataclass(frozen=True)
class TradeoffPoint:
    """
    Mean completeness and mean gamma correctness at one threshold.
    `correctness` is None when every instance abstained completely;
    `n_evaluated` counts the instances with a defined gamma.
    """
    q: Threshold
    completeness: float
    correctness: float | None
    n_evaluated: int
    completeness_std: float | None = None
    correctness_std: float | None = None

    def __post_init__(self):
        if not 0.0 <= self.completeness <= 1.0 + 1e-12:
            raise EvaluationError(f"Completeness {self.completeness} outside [0, 1].")
        if self.correctness is not None and not -1.0 - 1e-12 <= self.correctness <= 1.0 + 1e-12:
            raise EvaluationError(f"Correctness {self.correctness} outside [-1, 1].")


@dataclass(frozen=True)
class TradeoffCurve:
    """Trade-off points ordered by strictly increasing q; fold -1 is the cross-fold mean."""
    method: Method
    points: tuple[TradeoffPoint, ...]
    fold: int = -1

    def __post_init__(self):
        points = tuple(self.points)
        qs = [point.q.q for point in points]
        if any(b <= a for a, b in zip(qs, qs[1:])):
            raise InvalidGridError(f"Curve thresholds must be strictly increasing, got {qs}.")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "method", Method(self.method))

    @property
    def grid(self) -> tuple[float, ...]:
        return tuple(point.q.q for point in self.points)


@dataclass(frozen=True)
class InstanceResult:
    """One test instance at one threshold (verbose output)."""
    instance: int
    q: float
    completeness: float
    correctness: float | None
    effective_q: float
    repaired: bool
    fold: int = -1


@dataclass(frozen=True)
class SweepResult:
    curve: TradeoffCurve
    instances: tuple[InstanceResult, ...] = field(default=(), repr=False)


@dataclass(frozen=True)
class CrossValidationResult:
    """Fold-averaged curve (with pointwise standard deviations) plus the per-fold curves."""
    mean: TradeoffCurve
    folds: tuple[TradeoffCurve, ...]
    assignment: tuple[int, ...] = field(repr=False)
    instances: tuple[InstanceResult, ...] = field(default=(), repr=False)
