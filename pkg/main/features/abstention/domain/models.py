from __future__ import annotations

import math
from dataclasses import dataclass

from ...rankings.domain.models import PartialOrder
from ..config import settings
from ..exceptions.errors import InvalidThresholdError


@dataclass(frozen=True, order=True)
class Threshold:
    """A threshold q with 1/2 <= q < 1; pairs with P(y_i, y_j) > q are asserted."""
    q: float

    def __post_init__(self):
        q = float(self.q)
        if not math.isfinite(q) or not (settings.THRESHOLD_MIN <= q < settings.THRESHOLD_SUPREMUM):
            raise InvalidThresholdError(f"Threshold must satisfy 1/2 <= q < 1, got {self.q}.")
        object.__setattr__(self, "q", q)

    @classmethod
    def of(cls, value: Threshold | float) -> Threshold:
        return value if isinstance(value, Threshold) else cls(value)


@dataclass(frozen=True)
class AbstentionPrediction:
    """
    A predicted partial order. `effective_q` may exceed `requested_q` when
    the requested threshold was infeasible; `repaired` is set when a
    transitive closure had to be taken.
    """
    order: PartialOrder
    requested_q: Threshold
    effective_q: Threshold
    repaired: bool = False

    def __post_init__(self):
        if self.effective_q < self.requested_q:
            raise InvalidThresholdError(
                f"Effective threshold {self.effective_q.q} is below the requested {self.requested_q.q}."
            )
