from typing import Sequence

import numpy as np

from ...rankings.domain.enumeration import all_orders
from ...rankings.domain.models import Ranking, ValuedPreferenceRelation
from .interfaces import IRankingDistribution, IRankingEstimator
from ..exceptions.errors import FitError, InvalidPairError


class BuildPreferenceRelationUseCase:
    """
    Turns a distribution over rankings into the valued relation of its
    pairwise marginals, P[i][j] = P(y_i > y_j).
    """

    def __init__(self, distribution: IRankingDistribution):
        self._distribution = distribution

    def execute(self) -> ValuedPreferenceRelation:
        # Model-derived values are reciprocal only up to rounding.
        return ValuedPreferenceRelation(self._distribution.preference_matrix())


class EnumeratedMarginalUseCase:
    """
    The marginal P(y_i > y_j) as the literal sum of P(pi) over every
    ranking pi that places y_i before y_j. Used as an oracle for the
    closed-form and cached marginals.
    """

    def __init__(self, distribution: IRankingDistribution):
        self._distribution = distribution

    def execute(self, i: int, j: int) -> float:
        m = self._distribution.M
        if i == j or not (0 <= i < m and 0 <= j < m):
            raise InvalidPairError(f"Invalid label pair ({i}, {j}) for M={m}.")
        orders = all_orders(m)
        probabilities = np.exp(self._distribution.log_pdf_batch(orders))
        positions = np.argsort(orders, axis=1)
        return float(np.sum(probabilities[positions[:, i] < positions[:, j]]))


class FitRankingModelUseCase:
    """
    Validates training rankings, then delegates to the injected estimator.
    """

    def __init__(self, estimator: IRankingEstimator):
        self._estimator = estimator

    def execute(self, rankings: Sequence[Ranking]):
        if len(rankings) == 0:
            raise FitError("Cannot fit a ranking model to an empty set of rankings.")
        m = rankings[0].M
        for index, ranking in enumerate(rankings):
            if ranking.M != m:
                raise FitError(f"Ranking #{index} is over {ranking.M} labels, expected {m}.")
        return self._estimator.fit(rankings)
