from typing import Sequence

import numpy as np

from .models import Ranking
from ..exceptions.errors import DimensionMismatchError, InvalidRankingError


def stack_orders(rankings: Sequence[Ranking]) -> np.ndarray:
    """Stack rankings into an (N, M) array of label indices, checking a common M."""
    if len(rankings) == 0:
        raise InvalidRankingError("At least one ranking is required.")
    m = rankings[0].M
    for index, ranking in enumerate(rankings):
        if ranking.M != m:
            raise DimensionMismatchError(
                f"Ranking #{index} is over {ranking.M} labels, expected {m}."
            )
    return np.array([ranking.order for ranking in rankings], dtype=np.int64).reshape(len(rankings), m)


def mean_positions(orders: np.ndarray) -> np.ndarray:
    positions = np.argsort(orders, axis=1)
    return positions.mean(axis=0)


def borda_aggregate(rankings: Sequence[Ranking]) -> Ranking:
    """
    Borda count: labels sorted by mean position, ascending.
    Ties go to the smaller label index (stable sort over label indices).
    """
    means = mean_positions(stack_orders(rankings))
    return Ranking(tuple(int(label) for label in np.argsort(means, kind="stable")))
