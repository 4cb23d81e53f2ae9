import numpy as np

from ...rankings.domain.models import ValuedPreferenceRelation
from .interfaces import IPreferenceLearner
from .models import Dataset
from ..exceptions.errors import FeatureDimensionError


class PredictRelationsUseCase:
    """
    Trains the injected learner once and predicts a valued preference
    relation for every query row, in row order.
    """

    def __init__(self, learner: IPreferenceLearner):
        self._learner = learner

    def execute(self, train: Dataset, queries: np.ndarray) -> list[ValuedPreferenceRelation]:
        queries = np.atleast_2d(np.asarray(queries, dtype=float))
        if queries.shape[1] != train.d:
            raise FeatureDimensionError(
                f"Queries have {queries.shape[1]} features, the training data has {train.d}."
            )
        self._learner.fit(train)
        return [self._learner.relation(x) for x in queries]
