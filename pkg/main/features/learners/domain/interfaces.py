from abc import ABC, abstractmethod

import numpy as np

from ...rankings.domain.models import Ranking, ValuedPreferenceRelation
from .models import Dataset


class ILabelRanker(ABC):
    """
    A label ranker predicting one total order per instance.
    Used as the base learner of the ensemble baseline.
    """

    @abstractmethod
    def fit(self, train: Dataset) -> "ILabelRanker":
        pass

    @abstractmethod
    def predict_ranking(self, x: np.ndarray) -> Ranking:
        pass


class IPreferenceLearner(ABC):
    """
    A learner producing a valued preference relation per instance.
    This is the "Port" the evaluation sweep depends on.
    """

    @abstractmethod
    def fit(self, train: Dataset) -> "IPreferenceLearner":
        pass

    @abstractmethod
    def relation(self, x: np.ndarray) -> ValuedPreferenceRelation:
        """
        Raises:
            LearnerError: If the learner is not fitted or x has the wrong size.
        """
        pass
