from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import graph
from ..config import settings
from ..exceptions.errors import (
    DimensionMismatchError,
    InvalidRankingError,
    InvalidRelationError,
    CyclicRelationError,
)


@dataclass(frozen=True)
class Ranking:
    """
    A total order over M labels, stored as a permutation.

    `order[i]` is the (0-based) index of the label on position i, so
    `order[0]` is the most preferred label. `positions` is the inverse
    permutation: `positions[label]` is the position of that label.
    """
    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(int(label) for label in self.order)
        if sorted(order) != list(range(len(order))):
            raise InvalidRankingError(
                f"Ranking {order} is not a permutation of 0..{len(order) - 1}."
            )
        object.__setattr__(self, "order", order)

    @property
    def M(self) -> int:
        return len(self.order)

    @cached_property
    def positions(self) -> tuple[int, ...]:
        inverse = [0] * self.M
        for position, label in enumerate(self.order):
            inverse[label] = position
        return tuple(inverse)

    def position_of(self, label: int) -> int:
        return self.positions[label]

    def prefers(self, i: int, j: int) -> bool:
        """True if label i precedes label j in this ranking."""
        return self.positions[i] < self.positions[j]

    def reversed(self) -> Ranking:
        return Ranking(self.order[::-1])

    def relabel(self, mapping: Sequence[int]) -> Ranking:
        """Apply the label permutation `mapping` (label l becomes mapping[l])."""
        return Ranking(tuple(mapping[label] for label in self.order))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.order, dtype=np.int64)

    @classmethod
    def identity(cls, m: int) -> Ranking:
        return cls(tuple(range(m)))

    @classmethod
    def from_positions(cls, positions: Sequence[int]) -> Ranking:
        """Build a ranking from its rank vector (position of each label)."""
        return cls(tuple(int(label) for label in np.argsort(np.asarray(positions), kind="stable")))

    def __str__(self) -> str:
        return ">".join(str(label) for label in self.order)


def _as_bool_matrix(edges) -> np.ndarray:
    matrix = np.array(edges, dtype=bool)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InvalidRelationError(f"Relation must be a square matrix, got shape {matrix.shape}.")
    matrix.flags.writeable = False
    return matrix


@dataclass(frozen=True, eq=False)
class StrictRelation:
    """
    A crisp relation Q on the labels; `edges[i, j]` asserts y_i > y_j.
    Irreflexive and asymmetric, but not necessarily transitive or acyclic.
    """
    edges: np.ndarray

    def __post_init__(self):
        matrix = _as_bool_matrix(self.edges)
        if not graph.is_irreflexive(matrix):
            raise InvalidRelationError("Relation is not irreflexive.")
        if not graph.is_asymmetric(matrix):
            raise InvalidRelationError("Relation is not asymmetric.")
        object.__setattr__(self, "edges", matrix)

    @property
    def M(self) -> int:
        return self.edges.shape[0]

    def asserts(self, i: int, j: int) -> bool:
        return bool(self.edges[i, j])

    def asserted_pairs(self) -> list[tuple[int, int]]:
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self.edges))]

    def n_comparable_pairs(self) -> int:
        """Number of unordered label pairs on which an order is asserted."""
        return int(self.edges.sum())

    @classmethod
    def empty(cls, m: int):
        return cls(np.zeros((m, m), dtype=bool))

    @classmethod
    def from_pairs(cls, m: int, pairs: Iterable[tuple[int, int]]):
        matrix = np.zeros((m, m), dtype=bool)
        for i, j in pairs:
            matrix[i, j] = True
        return cls(matrix)

    @classmethod
    def from_ranking(cls, ranking: Ranking):
        """The total order of `ranking` as a relation."""
        positions = np.asarray(ranking.positions)
        return cls(positions[:, None] < positions[None, :])

    def __eq__(self, other) -> bool:
        if not isinstance(other, StrictRelation):
            return NotImplemented
        return self.edges.shape == other.edges.shape and bool(np.array_equal(self.edges, other.edges))

    __hash__ = None

    def __repr__(self) -> str:
        return f"{type(self).__name__}(M={self.M}, pairs={self.asserted_pairs()})"


@dataclass(frozen=True, eq=False)
class PartialOrder(StrictRelation):
    """A strict relation that is additionally transitive and acyclic."""

    def __post_init__(self):
        super().__post_init__()
        if graph.has_cycle(self.edges):
            raise CyclicRelationError("Relation contains a directed cycle.")
        if not graph.is_transitive(self.edges):
            raise InvalidRelationError("Relation is not transitive.")


@dataclass(frozen=True, eq=False)
class ValuedPreferenceRelation:
    """
    A reciprocal valued relation P: `matrix[i, j]` is the degree of
    support for y_i > y_j. The diagonal is fixed at 0.5 and never read.
    """
    matrix: np.ndarray
    tolerance: float = settings.RECIPROCITY_TOLERANCE

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimensionMismatchError(f"Preference matrix must be square, got shape {matrix.shape}.")
        np.fill_diagonal(matrix, 0.5)
        if not np.all(np.isfinite(matrix)) or np.any(matrix < 0.0) or np.any(matrix > 1.0):
            raise InvalidRelationError("Preference degrees must lie in [0, 1].")
        deviation = np.abs(matrix + matrix.T - 1.0)
        if np.any(deviation > self.tolerance):
            worst = np.unravel_index(int(np.argmax(deviation)), deviation.shape)
            raise InvalidRelationError(
                f"Preference relation is not reciprocal at {tuple(int(w) for w in worst)}: "
                f"P + P^T deviates from 1 by {deviation[worst]:.3g}."
            )
        matrix.flags.writeable = False
        object.__setattr__(self, "matrix", matrix)

    @property
    def M(self) -> int:
        return self.matrix.shape[0]

    def __getitem__(self, pair: tuple[int, int]) -> float:
        return float(self.matrix[pair])

    def off_diagonal_values(self) -> np.ndarray:
        return self.matrix[~np.eye(self.M, dtype=bool)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ValuedPreferenceRelation):
            return NotImplemented
        return self.matrix.shape == other.matrix.shape and bool(np.array_equal(self.matrix, other.matrix))

    __hash__ = None
