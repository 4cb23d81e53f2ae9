"""
This is the Service Layer - The only Public API for the learners feature.

Its responsibilities:
1.  Expose the per-instance operations (neighbors, local model, ensemble
    relation) as plain functions.
2.  Perform Dependency Injection: build the learner that matches a
    method tag and inject it into the prediction use case.
"""

import logging

import numpy as np

from ...rankings.domain.models import Ranking, ValuedPreferenceRelation
from ...ranking_models.domain.models import MallowsModel, PLModel

from ..data.label_rankers import (
    BootstrapEnsembleLearner,
    BordaNeighborRanker,
    ProbabilisticNeighborLearner,
)
from ..data.neighbors import NearestNeighbors

from ..domain.interfaces import IPreferenceLearner
from ..domain.models import Dataset, LearnerConfig, Method
from ..domain.use_case import PredictRelationsUseCase

from ..config import settings
from ..exceptions.errors import LearnerError

log = logging.getLogger(__name__)
log.setLevel(settings.LOG_LEVEL)
if not log.handlers:
    log.addHandler(logging.StreamHandler())
    log.handlers[0].setLevel(settings.LOG_LEVEL)


def knn_neighbors(train: Dataset, x: np.ndarray, k: int) -> list[Ranking]:
    """
    Rankings of the k training instances nearest to x (standardized
    Euclidean distance, ties by training-row index).

    Raises:
        FeatureDimensionError: If x does not have d components.
        NeighborCountError: If k > N.
    """
    rows = NearestNeighbors().fit(train).query(x, k)
    return [train.rankings[r] for r in rows]


def predict_model(train: Dataset, x: np.ndarray, cfg: LearnerConfig) -> MallowsModel | PLModel:
    """Fits the configured model kind to the k nearest neighbors of x."""
    return ProbabilisticNeighborLearner(cfg.k, cfg.model_kind).fit(train).predict_model(x)


def ensemble_relation(train: Dataset, x: np.ndarray, cfg: LearnerConfig) -> ValuedPreferenceRelation:
    """Vote fractions of a bootstrap ensemble of k-NN Borda rankers."""
    return make_learner(Method.BASELINE_ENSEMBLE, cfg).fit(train).relation(x)


def make_learner(method: Method, cfg: LearnerConfig) -> IPreferenceLearner:
    # --- Input Processing ---
    method = Method(method)

    # --- Dependency Injection ---
    if method is Method.BASELINE_ENSEMBLE:
        return BootstrapEnsembleLearner(
            base_factory=lambda: BordaNeighborRanker(cfg.k),
            size=cfg.ensemble_size,
            rng_seed=cfg.rng_seed,
        )
    return ProbabilisticNeighborLearner(cfg.k, method.model_kind)


def predict_relations(train: Dataset, queries: np.ndarray, method: Method,
                      cfg: LearnerConfig) -> list[ValuedPreferenceRelation]:
    """
    Trains the learner for `method` on `train` once and returns one valued
    relation per query row.
    """
    log.debug(f"Predicting {len(queries)} relations with {Method(method).value} (k={cfg.k}).")
    learner = make_learner(method, cfg)

    # --- Execute ---
    try:
        return PredictRelationsUseCase(learner).execute(train, queries)
    except LearnerError as e:
        log.error(f"Relation prediction failed: {e}")
        raise
