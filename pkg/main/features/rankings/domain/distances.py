from typing import Callable

import numpy as np

from .models import Ranking
from ..exceptions.errors import DimensionMismatchError

# A distance on rankings. Kendall's tau is the only one shipped; the alias
# exists so property checks can be run against arbitrary callables.
Distance = Callable[[Ranking, Ranking], float]


def _check_same_size(a: Ranking, b: Ranking) -> None:
    if a.M != b.M:
        raise DimensionMismatchError(f"Rankings over {a.M} and {b.M} labels cannot be compared.")


def kendall_distance(a: Ranking, b: Ranking) -> int:
    """Number of label pairs ordered differently by `a` and `b`."""
    _check_same_size(a, b)
    pos_a = np.asarray(a.positions)
    pos_b = np.asarray(b.positions)
    before_a = pos_a[:, None] < pos_a[None, :]
    before_b = pos_b[:, None] < pos_b[None, :]
    return int(np.sum(before_a & ~before_b))


def inversion_counts(orders: np.ndarray) -> np.ndarray:
    """
    Kendall distance of every row of `orders` (shape (n, M)) to the identity.

    Counts inversions pair by pair so the whole batch is vectorised.
    """
    orders = np.asarray(orders)
    counts = np.zeros(orders.shape[0], dtype=np.int64)
    m = orders.shape[1]
    for i in range(m - 1):
        counts += np.sum(orders[:, i:i + 1] > orders[:, i + 1:], axis=1)
    return counts


def kendall_distances_to(orders: np.ndarray, center: Ranking) -> np.ndarray:
    """Kendall distance of every row of `orders` to `center`."""
    orders = np.asarray(orders)
    if orders.shape[1] != center.M:
        raise DimensionMismatchError(
            f"Rankings over {orders.shape[1]} labels cannot be compared with a center over {center.M}."
        )
    # Relabel so that the center becomes the identity; Kendall is invariant under relabelling.
    relabelled = np.asarray(center.positions)[orders]
    return inversion_counts(relabelled)
