from abc import ABC, abstractmethod

from ...rankings.domain.models import ValuedPreferenceRelation
from .models import AbstentionPrediction, Threshold


class IPartialOrderPredictor(ABC):
    """
    Turns a valued preference relation into a partial order at a threshold.
    """

    @property
    @abstractmethod
    def repairs(self) -> bool:
        """Whether this predictor may raise the threshold or close the relation."""
        pass

    @abstractmethod
    def predict(self, relation: ValuedPreferenceRelation, q: Threshold) -> AbstentionPrediction:
        """
        Raises:
            AbstentionError: If no partial order can be produced.
        """
        pass
