from typing import Callable, Sequence

from ...rankings.domain.models import ValuedPreferenceRelation
from .interfaces import IPartialOrderPredictor
from .models import AbstentionPrediction, Threshold


class PredictPartialOrderUseCase:
    """
    Predicts a partial order from a valued relation with the injected
    predictor (strict thresholding or the repairing baseline).
    """

    def __init__(self, predictor: IPartialOrderPredictor):
        self._predictor = predictor

    def execute(self, relation: ValuedPreferenceRelation, q: Threshold) -> AbstentionPrediction:
        return self._predictor.predict(relation, q)

    def execute_grid(self, relation: ValuedPreferenceRelation,
                     grid: Sequence[Threshold]) -> list[AbstentionPrediction]:
        """One relation, many thresholds: the relation is only built once by the caller."""
        return [self._predictor.predict(relation, q) for q in grid]


class PredictFromModelUseCase:
    """
    Builds the valued relation of a ranking model (through the injected
    builder) and thresholds it.
    """

    def __init__(self, relation_builder: Callable[[object], ValuedPreferenceRelation],
                 predictor: IPartialOrderPredictor):
        self._relation_builder = relation_builder
        self._predict = PredictPartialOrderUseCase(predictor)

    def execute(self, model, q: Threshold) -> AbstentionPrediction:
        return self._predict.execute(self._relation_builder(model), q)
