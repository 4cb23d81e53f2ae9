"""
Instance-based label rankers.

- BordaNeighborRanker: aggregates the neighbors' rankings by Borda count
  (the base learner of the ensemble baseline).
- ProbabilisticNeighborLearner: fits a Mallows or Plackett-Luce model to
  the neighbors' rankings and reports its pairwise marginals.
- BootstrapEnsembleLearner: B base rankers on bootstrap resamples; the
  valued relation is the fraction of members voting y_i > y_j.
"""
import logging
from typing import Callable

import numpy as np

from ...rankings.domain.aggregation import borda_aggregate
from ...rankings.domain.models import Ranking, ValuedPreferenceRelation
from ...ranking_models.domain.models import MallowsModel, PLModel
from ...ranking_models.service.api import build_preference_relation, fit_mallows, fit_pl
from ..config import settings
from ..domain.interfaces import ILabelRanker, IPreferenceLearner
from ..domain.models import Dataset, ModelKind
from ..exceptions.errors import LearnerError
from .neighbors import NearestNeighbors

log = logging.getLogger(__name__)
log.setLevel(settings.LOG_LEVEL)
if not log.handlers:
    log.addHandler(logging.StreamHandler())
    log.handlers[0].setLevel(settings.LOG_LEVEL)


class BordaNeighborRanker(ILabelRanker):

    def __init__(self, k: int):
        self.k = k
        self._neighbors = NearestNeighbors()

    def fit(self, train: Dataset) -> "BordaNeighborRanker":
        self._neighbors.fit(train)
        return self

    def predict_ranking(self, x: np.ndarray) -> Ranking:
        rows = self._neighbors.query(x, self.k)
        return borda_aggregate([self._neighbors.train.rankings[r] for r in rows])


class ProbabilisticNeighborLearner(IPreferenceLearner):

    def __init__(self, k: int, model_kind: ModelKind):
        self.k = k
        self.model_kind = ModelKind(model_kind)
        self._neighbors = NearestNeighbors()

    def fit(self, train: Dataset) -> "ProbabilisticNeighborLearner":
        self._neighbors.fit(train)
        return self

    def neighbor_rankings(self, x: np.ndarray) -> list[Ranking]:
        rows = self._neighbors.query(x, self.k)
        return [self._neighbors.train.rankings[r] for r in rows]

    def predict_model(self, x: np.ndarray) -> MallowsModel | PLModel:
        rankings = self.neighbor_rankings(x)
        fit = fit_mallows if self.model_kind is ModelKind.MALLOWS else fit_pl
        model, report = fit(rankings)
        if report.boundary_hit:
            log.debug(f"Local {self.model_kind.value} fit hit a parameter bound: {report}")
        return model

    def relation(self, x: np.ndarray) -> ValuedPreferenceRelation:
        return build_preference_relation(self.predict_model(x))


class BootstrapEnsembleLearner(IPreferenceLearner):
    """
    Member b is trained on a size-N resample (with replacement) drawn with
    seed `rng_seed + b`.
    """

    def __init__(self, base_factory: Callable[[], ILabelRanker], size: int, rng_seed: int):
        self.base_factory = base_factory
        self.size = size
        self.rng_seed = rng_seed
        self._members: list[ILabelRanker] = []
        self._m = 0

    def fit(self, train: Dataset) -> "BootstrapEnsembleLearner":
        self._members = []
        for member in range(self.size):
            rng = np.random.default_rng(self.rng_seed + member)
            rows = rng.integers(0, train.N, size=train.N)
            self._members.append(self.base_factory().fit(train.subset(rows)))
        self._m = train.M
        log.debug(f"Trained {self.size} ensemble members on bootstrap resamples of {train.N} instances.")
        return self

    def votes(self, x: np.ndarray) -> np.ndarray:
        """votes[i, j] = number of members ranking y_i before y_j."""
        if not self._members:
            raise LearnerError("The ensemble must be fitted before predicting.")
        counts = np.zeros((self._m, self._m), dtype=np.int64)
        for member in self._members:
            positions = np.asarray(member.predict_ranking(x).positions)
            counts += positions[:, None] < positions[None, :]
        return counts

    def relation(self, x: np.ndarray) -> ValuedPreferenceRelation:
        # Each member votes on every pair, so votes[i, j] + votes[j, i] = B.
        return ValuedPreferenceRelation(self.votes(x) / self.size)
