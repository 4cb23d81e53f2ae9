import logging

from ...rankings.domain import graph
from ...rankings.domain.models import PartialOrder, ValuedPreferenceRelation
from ...rankings.exceptions.errors import InvalidRelationError
from ..config import settings
from ..domain.interfaces import IPartialOrderPredictor
from ..domain.models import AbstentionPrediction, Threshold
from ..exceptions.errors import PartialOrderViolationError
from .thresholding import find_q_min, threshold_edges

log = logging.getLogger(__name__)
log.setLevel(settings.LOG_LEVEL)
if not log.handlers:
    log.addHandler(logging.StreamHandler())
    log.handlers[0].setLevel(settings.LOG_LEVEL)


class StrictThresholdPredictor(IPartialOrderPredictor):
    """
    Thresholds the relation at q and validates the result directly.
    For relations of Mallows / Plackett-Luce marginals this is always a
    partial order; anything else is reported as a violation.
    """

    @property
    def repairs(self) -> bool:
        return False

    def predict(self, relation: ValuedPreferenceRelation, q: Threshold) -> AbstentionPrediction:
        edges = threshold_edges(relation, q.q)
        try:
            order = PartialOrder(edges)
        except InvalidRelationError as e:
            log.error(f"Thresholding model marginals at q={q.q} did not give a partial order: {e}")
            raise PartialOrderViolationError(
                f"Thresholded relation at q={q.q} is not a partial order: {e}"
            ) from e
        return AbstentionPrediction(order=order, requested_q=q, effective_q=q, repaired=False)


class RepairingThresholdPredictor(IPartialOrderPredictor):
    """
    The pairwise baseline: raise q to the smallest feasible threshold
    q_min if needed, threshold, and replace a non-transitive result by its
    transitive closure.
    """

    @property
    def repairs(self) -> bool:
        return True

    def predict(self, relation: ValuedPreferenceRelation, q: Threshold) -> AbstentionPrediction:
        effective_q = max(q, find_q_min(relation))
        if effective_q > q:
            log.debug(f"Requested q={q.q} is infeasible; raised to q_min={effective_q.q}.")

        edges = threshold_edges(relation, effective_q.q)
        repaired = not graph.is_transitive(edges)
        if repaired:
            edges = graph.transitive_closure(edges)
        return AbstentionPrediction(
            order=PartialOrder(edges),
            requested_q=q,
            effective_q=effective_q,
            repaired=repaired,
        )
