"""
Thresholding of valued preference relations and the q_min search.
"""
import numpy as np

from ...rankings.domain import graph
from ...rankings.domain.models import StrictRelation, ValuedPreferenceRelation
from ..config import settings
from ..domain.models import Threshold
from ..exceptions.errors import InfeasibleRelationError


def snapped_matrix(relation: ValuedPreferenceRelation) -> np.ndarray:
    matrix = np.array(relation.matrix)
    matrix[np.abs(matrix - 0.5) <= settings.TIE_SNAP_TOLERANCE] = 0.5
    return matrix


def threshold_edges(relation: ValuedPreferenceRelation, q: float) -> np.ndarray:
    """edges[i, j] = P[i, j] > q (strict: a degree equal to q abstains)."""
    edges = snapped_matrix(relation) > q
    np.fill_diagonal(edges, False)
    return edges


def threshold_relation(relation: ValuedPreferenceRelation, q: Threshold) -> StrictRelation:
    return StrictRelation(threshold_edges(relation, q.q))


def is_feasible(relation: ValuedPreferenceRelation, q: Threshold) -> bool:
    return not graph.has_cycle(threshold_edges(relation, q.q))


def candidate_thresholds(relation: ValuedPreferenceRelation) -> list[float]:
    """{0.5} together with every distinct off-diagonal degree in [0.5, 1), ascending."""
    values = snapped_matrix(relation)[~np.eye(relation.M, dtype=bool)]
    in_range = values[(values >= settings.THRESHOLD_MIN) & (values < settings.THRESHOLD_SUPREMUM)]
    return sorted({settings.THRESHOLD_MIN, *(float(v) for v in in_range)})


def find_q_min(relation: ValuedPreferenceRelation) -> Threshold:
    """
    Smallest candidate threshold whose thresholded relation is acyclic.

    Raising q only removes edges, so feasibility is monotone along the
    sorted candidates and a binary search finds the boundary.

    Raises:
        InfeasibleRelationError: If even the largest candidate leaves a
                                 cycle (a cycle of degree-1 preferences).
    """
    candidates = candidate_thresholds(relation)
    if graph.has_cycle(threshold_edges(relation, candidates[-1])):
        raise InfeasibleRelationError(
            "No threshold below 1 removes every cycle: the relation has a cycle of certain preferences."
        )
    lo, hi = 0, len(candidates) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if graph.has_cycle(threshold_edges(relation, candidates[mid])):
            lo = mid + 1
        else:
            hi = mid
    return Threshold(candidates[lo])
