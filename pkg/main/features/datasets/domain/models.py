from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from ...ranking_models.config.settings import THETA_MAX
from ..config import settings
from ..exceptions.errors import SyntheticSpecError


class Generator(str, Enum):
    PL_LINEAR = "pl-linear"
    MALLOWS_REGIONS = "mallows-regions"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True)
class SynthSpec:
    """
    pl-linear: x ~ N(0, I_d), log v(x) = weight_scale * W x + noise * eps with
    W ~ N(0, 1)^(M x d), eps ~ N(0, 1)^M; the ranking is drawn from PL(v(x)).

    mallows-regions: `regions` prototype points split the instance space
    (nearest prototype wins), each region has its own center pi0, and the
    ranking is drawn from Mallows(pi0, theta). `noise` jitters the point
    used to pick the region, blurring the region borders.
    """
    generator: Generator
    n: int
    m: int
    d: int
    noise: float = 0.0
    theta: float = settings.DEFAULT_SYNTH_THETA
    weight_scale: float = settings.DEFAULT_SYNTH_WEIGHT_SCALE
    regions: int = settings.DEFAULT_SYNTH_REGIONS

    def __post_init__(self):
        try:
            object.__setattr__(self, "generator", Generator(self.generator))
        except ValueError as e:
            raise SyntheticSpecError(
                f"Unknown generator '{self.generator}'; expected one of {[g.value for g in Generator]}."
            ) from e
        for name in ("n", "m", "d", "regions"):
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise SyntheticSpecError(f"{name} must be a positive integer, got {value}.")
        if self.m < 2:
            raise SyntheticSpecError(f"A label ranking needs at least 2 labels, got m={self.m}.")
        for name in ("noise", "weight_scale"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise SyntheticSpecError(f"{name} must be finite and non-negative, got {value}.")
        if not 0.0 <= self.theta <= THETA_MAX:
            raise SyntheticSpecError(f"theta must lie in [0, {THETA_MAX}], got {self.theta}.")
