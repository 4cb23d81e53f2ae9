from functools import lru_cache
from itertools import permutations
from typing import Iterator

import numpy as np

from .models import Ranking
from ..config import settings
from ..exceptions.errors import EnumerationCapError


def check_enumerable(m: int) -> None:
    if m < 1:
        raise EnumerationCapError(f"Label count must be at least 1, got {m}.")
    if m > settings.ENUMERATION_CAP:
        raise EnumerationCapError(
            f"Exhaustive enumeration is limited to M <= {settings.ENUMERATION_CAP} labels, got M={m}."
        )


def iter_rankings(m: int) -> Iterator[Ranking]:
    """All M! rankings in lexicographic order of `order`; the cap is checked eagerly."""
    check_enumerable(m)
    return (Ranking(order) for order in permutations(range(m)))


@lru_cache(maxsize=None)
def all_orders(m: int) -> np.ndarray:
    """
    The M! permutations as a read-only (M!, M) integer array, in the same
    order as `iter_rankings`.
    """
    check_enumerable(m)
    orders = np.array(list(permutations(range(m))), dtype=np.int64).reshape(-1, m)
    orders.flags.writeable = False
    return orders
