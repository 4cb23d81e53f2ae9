"""
Boolean adjacency-matrix algorithms shared by the relation models.

These work on raw numpy arrays so that the domain models can validate
themselves without importing the service layer.
"""
import numpy as np


def is_irreflexive(adjacency: np.ndarray) -> bool:
    return not bool(np.any(np.diagonal(adjacency)))


def is_asymmetric(adjacency: np.ndarray) -> bool:
    return not bool(np.any(adjacency & adjacency.T))


def has_cycle(adjacency: np.ndarray) -> bool:
    """
    Depth-first search for a directed cycle.

    Uses an explicit stack so that large relations cannot hit the
    recursion limit. A back edge to a node still on the stack (GREY)
    closes a cycle.
    """
    m = adjacency.shape[0]
    white, grey, black = 0, 1, 2
    colour = [white] * m
    successors = [np.flatnonzero(adjacency[i]).tolist() for i in range(m)]

    for root in range(m):
        if colour[root] != white:
            continue
        colour[root] = grey
        stack = [(root, iter(successors[root]))]
        while stack:
            node, children = stack[-1]
            advanced = False
            for child in children:
                if colour[child] == grey:
                    return True
                if colour[child] == white:
                    colour[child] = grey
                    stack.append((child, iter(successors[child])))
                    advanced = True
                    break
            if not advanced:
                colour[node] = black
                stack.pop()
    return False


def is_transitive(adjacency: np.ndarray) -> bool:
    as_int = adjacency.astype(np.int64)
    two_step = (as_int @ as_int) > 0
    return not bool(np.any(two_step & ~adjacency))


def transitive_closure(adjacency: np.ndarray) -> np.ndarray:
    """Floyd-Warshall reachability, O(M^3)."""
    reach = adjacency.astype(bool).copy()
    for k in range(reach.shape[0]):
        reach |= np.outer(reach[:, k], reach[k, :])
    return reach
