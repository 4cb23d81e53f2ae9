"""
This is the Service Layer - The only Public API for the rankings feature.

Other features should import permutations, distances and relation
algorithms from here (and the value types from `domain.models`).
"""

import logging
from typing import Iterator

from ..domain import graph
from ..domain.aggregation import borda_aggregate
from ..domain.distances import Distance, kendall_distance
from ..domain.enumeration import iter_rankings
from ..domain.models import Ranking, StrictRelation, PartialOrder
from ..domain.use_case import TranspositionPropertyCheck
from ..config import settings
from ..exceptions.errors import CyclicRelationError, InvalidRelationError

log = logging.getLogger(__name__)
log.setLevel(settings.LOG_LEVEL)
if not log.handlers:
    log.addHandler(logging.StreamHandler())
    log.handlers[0].setLevel(settings.LOG_LEVEL)

__all__ = [
    "kendall_distance",
    "enumerate_rankings",
    "has_cycle",
    "is_transitive",
    "transitive_closure",
    "validate_partial_order",
    "borda_aggregate",
    "check_transposition_property",
]


def enumerate_rankings(m: int) -> Iterator[Ranking]:
    """
    Yields all M! rankings of M labels in a deterministic order.

    Raises:
        EnumerationCapError: If M is below 1 or above the enumeration cap.
    """
    return iter_rankings(m)


def has_cycle(relation: StrictRelation) -> bool:
    return graph.has_cycle(relation.edges)


def is_transitive(relation: StrictRelation) -> bool:
    return graph.is_transitive(relation.edges)


def transitive_closure(relation: StrictRelation) -> PartialOrder:
    """
    Smallest transitive superset of an acyclic relation.

    Raises:
        CyclicRelationError: If the relation has a cycle (its closure
                             would not be asymmetric).
    """
    if graph.has_cycle(relation.edges):
        log.error(f"Refusing to close a cyclic relation over {relation.M} labels.")
        raise CyclicRelationError("Cannot take the transitive closure of a cyclic relation.")
    return PartialOrder(graph.transitive_closure(relation.edges))


def validate_partial_order(relation: StrictRelation) -> PartialOrder:
    """
    Re-validates a relation as a PartialOrder.

    Raises:
        InvalidRelationError: Naming the first violated property.
    """
    if isinstance(relation, PartialOrder):
        return relation
    try:
        return PartialOrder(relation.edges)
    except InvalidRelationError as e:
        log.debug(f"Relation failed partial-order validation: {e}")
        raise


def check_transposition_property(
    distance: Distance = kendall_distance,
    samples: int = settings.TRANSPOSITION_CHECK_SAMPLES,
    m: int = 4,
    rng_seed: int = 0,
) -> bool:
    """
    Samples random witness triples and checks D(pi, pi') <= D(pi, pi'').

    Returns:
        True if no sampled triple violates the transposition property.
    """
    log.info(f"Checking the transposition property on {samples} triples with M={m}.")
    # --- Dependency Injection ---
    use_case = TranspositionPropertyCheck(distance=distance)

    # --- Execute ---
    holds = use_case.execute(samples=samples, m=m, rng_seed=rng_seed)
    if not holds:
        log.warning("Transposition property violated on a sampled triple.")
    return holds
