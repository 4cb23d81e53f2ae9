"""
This is the Service Layer - The only Public API for the abstention feature.

Two ways from a valued preference relation to a partial order:
- `predict_probabilistic`: threshold the marginals of a Mallows or
  Plackett-Luce model; the result is a partial order for every q in [1/2, 1).
- `predict_baseline`: threshold an arbitrary reciprocal relation (e.g.
  ensemble vote fractions), raising q to q_min and repairing by
  transitive closure where needed.
"""

import logging

from ...rankings.domain.models import StrictRelation, ValuedPreferenceRelation
from ...ranking_models.service.api import RankingModel, build_preference_relation

from ..data import thresholding
from ..data.predictors import RepairingThresholdPredictor, StrictThresholdPredictor

from ..domain.interfaces import IPartialOrderPredictor
from ..domain.models import AbstentionPrediction, Threshold
from ..domain.use_case import PredictFromModelUseCase, PredictPartialOrderUseCase

from ..config import settings
from ..exceptions.errors import AbstentionError, PartialOrderViolationError

log = logging.getLogger(__name__)
log.setLevel(settings.LOG_LEVEL)
if not log.handlers:
    log.addHandler(logging.StreamHandler())
    log.handlers[0].setLevel(settings.LOG_LEVEL)


def threshold_relation(relation: ValuedPreferenceRelation, q: Threshold | float) -> StrictRelation:
    """edges[i][j] = P[i][j] > q, with strict inequality."""
    return thresholding.threshold_relation(relation, Threshold.of(q))


def is_feasible(relation: ValuedPreferenceRelation, q: Threshold | float) -> bool:
    return thresholding.is_feasible(relation, Threshold.of(q))


def candidate_thresholds(relation: ValuedPreferenceRelation) -> list[float]:
    return thresholding.candidate_thresholds(relation)


def find_q_min(relation: ValuedPreferenceRelation) -> Threshold:
    """
    Smallest feasible threshold among {0.5} and the degrees of P in [0.5, 1).

    Raises:
        InfeasibleRelationError: If P contains a cycle of degree-1 preferences.
    """
    return thresholding.find_q_min(relation)


def predictor_for(repair: bool) -> IPartialOrderPredictor:
    return RepairingThresholdPredictor() if repair else StrictThresholdPredictor()


def predict_probabilistic(model: RankingModel, q: Threshold | float) -> AbstentionPrediction:
    """
    Thresholds the pairwise marginals of a Mallows / Plackett-Luce model.

    Raises:
        PartialOrderViolationError: If the thresholded relation is not a
                                    partial order (a defect, not an input error).
    """
    # --- Dependency Injection ---
    use_case = PredictFromModelUseCase(
        relation_builder=build_preference_relation,
        predictor=StrictThresholdPredictor(),
    )

    # --- Execute ---
    try:
        return use_case.execute(model, Threshold.of(q))
    except PartialOrderViolationError as e:
        log.error(f"CRITICAL: {e}")
        raise


def predict_relation(relation: ValuedPreferenceRelation, q: Threshold | float,
                     repair: bool) -> AbstentionPrediction:
    """Thresholds an already built relation with the strict or repairing predictor."""
    return PredictPartialOrderUseCase(predictor_for(repair)).execute(relation, Threshold.of(q))


def predict_baseline(relation: ValuedPreferenceRelation, q: Threshold | float) -> AbstentionPrediction:
    """
    effective_q = max(q, q_min); threshold; transitive closure if needed.

    Raises:
        InfeasibleRelationError: If P contains a cycle of degree-1 preferences.
    """
    try:
        return PredictPartialOrderUseCase(RepairingThresholdPredictor()).execute(relation, Threshold.of(q))
    except AbstentionError as e:
        log.error(f"Baseline prediction failed: {e}")
        raise
