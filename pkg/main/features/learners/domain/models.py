from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from ...rankings.domain.models import Ranking
from ...rankings.exceptions.errors import RankingError
from ..config import settings
from ..exceptions.errors import InvalidDatasetError, InvalidLearnerConfigError


class ModelKind(str, Enum):
    MALLOWS = "mallows"
    PL = "pl"


class Method(str, Enum):
    """How per-instance preference information is produced and thresholded."""
    PROBABILISTIC_MALLOWS = "probabilistic-mallows"
    PROBABILISTIC_PL = "probabilistic-pl"
    BASELINE_ENSEMBLE = "baseline-ensemble"

    @property
    def is_probabilistic(self) -> bool:
        return self is not Method.BASELINE_ENSEMBLE

    @property
    def model_kind(self) -> ModelKind | None:
        return {
            Method.PROBABILISTIC_MALLOWS: ModelKind.MALLOWS,
            Method.PROBABILISTIC_PL: ModelKind.PL,
        }.get(self)

    @classmethod
    def from_flag(cls, flag: str) -> Method:
        """Accepts the short command-line names as well as the full tags."""
        short = {"mallows": cls.PROBABILISTIC_MALLOWS, "pl": cls.PROBABILISTIC_PL, "baseline": cls.BASELINE_ENSEMBLE}
        return short[flag] if flag in short else cls(flag)


@dataclass(frozen=True, eq=False)
class Dataset:
    """
    Feature vectors with a complete ranking of the same M labels per row.
    Label and feature names are kept here; everything else refers to labels
    by index.
    """
    features: np.ndarray
    rankings: tuple[Ranking, ...]
    label_names: tuple[str, ...]
    feature_names: tuple[str, ...]

    def __post_init__(self):
        features = np.array(self.features, dtype=float)
        if features.ndim != 2:
            raise InvalidDatasetError(f"Features must be an N x d matrix, got shape {features.shape}.")
        n, d = features.shape
        if n < 1 or d < 1:
            raise InvalidDatasetError(f"A dataset needs N >= 1 rows and d >= 1 features, got {n} x {d}.")
        if not np.all(np.isfinite(features)):
            row, column = (int(v) for v in np.argwhere(~np.isfinite(features))[0])
            raise InvalidDatasetError(f"Non-finite feature value at row {row}, column {column}.")

        rankings = tuple(self.rankings)
        label_names = tuple(str(name) for name in self.label_names)
        feature_names = tuple(str(name) for name in self.feature_names)
        if len(rankings) != n:
            raise InvalidDatasetError(f"{len(rankings)} rankings for {n} feature rows.")
        if len(feature_names) != d:
            raise InvalidDatasetError(f"{len(feature_names)} feature names for {d} feature columns.")
        if len(set(label_names)) != len(label_names):
            raise InvalidDatasetError(f"Duplicate label names in {label_names}.")
        for row, ranking in enumerate(rankings):
            if ranking.M != len(label_names):
                raise InvalidDatasetError(
                    f"Ranking at row {row} covers {ranking.M} labels, expected all {len(label_names)}."
                )

        features.flags.writeable = False
        object.__setattr__(self, "features", features)
        object.__setattr__(self, "rankings", rankings)
        object.__setattr__(self, "label_names", label_names)
        object.__setattr__(self, "feature_names", feature_names)

    @property
    def N(self) -> int:
        return self.features.shape[0]

    @property
    def d(self) -> int:
        return self.features.shape[1]

    @property
    def M(self) -> int:
        return len(self.label_names)

    def subset(self, rows: Sequence[int]) -> Dataset:
        rows = [int(r) for r in rows]
        return Dataset(
            features=self.features[rows],
            rankings=tuple(self.rankings[r] for r in rows),
            label_names=self.label_names,
            feature_names=self.feature_names,
        )

    def ranking_from_names(self, names: Sequence[str]) -> Ranking:
        index = {name: i for i, name in enumerate(self.label_names)}
        try:
            return Ranking(tuple(index[name] for name in names))
        except (KeyError, RankingError) as e:
            raise InvalidDatasetError(f"Cannot read {list(names)} as a ranking of {self.label_names}: {e}") from e

    def ranking_to_names(self, ranking: Ranking) -> tuple[str, ...]:
        return tuple(self.label_names[label] for label in ranking.order)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return (
            self.features.shape == other.features.shape
            and bool(np.array_equal(self.features, other.features))
            and self.rankings == other.rankings
            and self.label_names == other.label_names
            and self.feature_names == other.feature_names
        )

    __hash__ = None


@dataclass(frozen=True)
class LearnerConfig:
    k: int = settings.DEFAULT_K
    model_kind: ModelKind = ModelKind.PL
    ensemble_size: int = settings.DEFAULT_ENSEMBLE_SIZE
    rng_seed: int = settings.DEFAULT_SEED

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise InvalidLearnerConfigError(f"k must be a positive integer, got {self.k}.")
        if int(self.ensemble_size) != self.ensemble_size or self.ensemble_size < 1:
            raise InvalidLearnerConfigError(f"Ensemble size must be a positive integer, got {self.ensemble_size}.")
        object.__setattr__(self, "model_kind", ModelKind(self.model_kind))
