import numpy as np

from ...rankings.domain.models import Ranking, StrictRelation
from ...rankings.exceptions.errors import DimensionMismatchError


def gamma_correctness(truth: Ranking, pred: StrictRelation) -> float | None:
    """
    Goodman-Kruskal gamma between the true ranking and a predicted
    partial order, over the pairs on which the prediction commits:
    (C - D) / (C + D). None when the prediction abstains on every pair.
    """
    if truth.M != pred.M:
        raise DimensionMismatchError(f"Truth over {truth.M} labels, prediction over {pred.M}.")
    positions = np.asarray(truth.positions)
    truth_before = positions[:, None] < positions[None, :]
    concordant = int(np.sum(pred.edges & truth_before))
    discordant = int(np.sum(pred.edges & ~truth_before))
    if concordant + discordant == 0:
        return None
    return (concordant - discordant) / (concordant + discordant)


def completeness(pred: StrictRelation) -> float:
    """Fraction of the M(M-1)/2 label pairs on which an order is asserted."""
    m = pred.M
    if m < 2:
        return 1.0
    return pred.n_comparable_pairs() / (m * (m - 1) / 2)
