import numpy as np

from .distances import Distance
from .models import Ranking
from ..exceptions.errors import DimensionMismatchError


def _swap_labels(ranking: Ranking, a: int, b: int) -> Ranking:
    order = list(ranking.order)
    pos_a, pos_b = ranking.position_of(a), ranking.position_of(b)
    order[pos_a], order[pos_b] = b, a
    return Ranking(tuple(order))


class TranspositionPropertyCheck:
    """
    Randomised check of the transposition property of a distance:
    if y_i precedes y_j in both pi and pi', and pi'' is pi' with y_i and
    y_j swapped, then D(pi, pi') <= D(pi, pi'').
    """

    def __init__(self, distance: Distance):
        self._distance = distance

    def execute(self, samples: int, m: int, rng_seed: int) -> bool:
        """
        Draws `samples` witness triples and reports whether none of them
        violates the property.

        Raises:
            DimensionMismatchError: If m < 2 (no pair to transpose).
        """
        if m < 2:
            raise DimensionMismatchError(f"The transposition property needs at least 2 labels, got {m}.")

        rng = np.random.default_rng(rng_seed)
        for _ in range(samples):
            pi = Ranking(tuple(rng.permutation(m)))
            pi_prime = Ranking(tuple(rng.permutation(m)))
            a, b = (int(label) for label in rng.choice(m, size=2, replace=False))
            # Orient the pair so that i precedes j in pi.
            i, j = (a, b) if pi.prefers(a, b) else (b, a)
            if not pi_prime.prefers(i, j):
                pi_prime = _swap_labels(pi_prime, i, j)
            pi_double_prime = _swap_labels(pi_prime, i, j)

            if self._distance(pi, pi_prime) > self._distance(pi, pi_double_prime):
                return False
        return True
