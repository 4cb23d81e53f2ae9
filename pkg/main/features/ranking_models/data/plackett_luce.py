"""
Plackett-Luce model, backed by numpy.

Sampling follows the vase model: labelled balls are drawn in proportion to
their weights, the k-th accepted draw fills position k, and draws of an
already placed label are annulled (equivalently, the draw is restricted to
the labels still in the vase).
"""
import logging
from typing import Sequence

import numpy as np

from ...rankings.domain.aggregation import stack_orders
from ...rankings.domain.models import Ranking
from ...rankings.exceptions.errors import RankingError
from ..domain.interfaces import IRankingDistribution, IRankingEstimator
from ..domain.models import FitReport, PLModel
from ..exceptions.errors import FitError, InvalidPairError
from ..config import settings

log = logging.getLogger(__name__)
log.setLevel(settings.LOG_LEVEL)
if not log.handlers:
    log.addHandler(logging.StreamHandler())
    log.handlers[0].setLevel(settings.LOG_LEVEL)


def _suffix_sums(values: np.ndarray) -> np.ndarray:
    """suffix[:, t] = values[:, t] + ... + values[:, M-1]."""
    return np.cumsum(values[:, ::-1], axis=1)[:, ::-1]


def pl_log_likelihood(weights: np.ndarray, orders: np.ndarray) -> float:
    values = np.asarray(weights)[orders]
    return float(np.sum(np.log(values) - np.log(_suffix_sums(values))))


class PlackettLuceDistribution(IRankingDistribution):
    """
    A concrete implementation of IRankingDistribution for the Plackett-Luce model.
    """

    def __init__(self, model: PLModel):
        self.model = model
        self._weights = np.asarray(model.weights, dtype=float)

    @property
    def M(self) -> int:
        return self.model.M

    def log_pdf_batch(self, orders: np.ndarray) -> np.ndarray:
        values = self._weights[np.asarray(orders)]
        return np.sum(np.log(values) - np.log(_suffix_sums(values)), axis=1)

    def pairwise_marginal(self, i: int, j: int) -> float:
        if i == j:
            raise InvalidPairError(f"A pairwise marginal needs two distinct labels, got i = j = {i}.")
        if not (0 <= i < self.M and 0 <= j < self.M):
            raise InvalidPairError(f"Labels ({i}, {j}) out of range for M={self.M}.")
        # Bradley-Terry ratio: marginalising the stagewise model over all linear extensions.
        return float(self._weights[i] / (self._weights[i] + self._weights[j]))

    def preference_matrix(self) -> np.ndarray:
        v = self._weights
        matrix = v[:, None] / (v[:, None] + v[None, :])
        np.fill_diagonal(matrix, 0.5)
        return matrix

    def sample(self, n: int, rng: np.random.Generator) -> list[Ranking]:
        m = self.M
        in_vase = np.ones((n, m), dtype=bool)
        orders = np.empty((n, m), dtype=np.int64)
        rows = np.arange(n)
        for position in range(m):
            mass = np.where(in_vase, self._weights[None, :], 0.0)
            cumulative = np.cumsum(mass, axis=1)
            draws = rng.random(n) * cumulative[:, -1]
            chosen = np.minimum((cumulative <= draws[:, None]).sum(axis=1), m - 1)
            # Guard against landing on an already drawn label through rounding at the top end.
            chosen = np.where(in_vase[rows, chosen], chosen, np.argmax(np.where(in_vase, cumulative, -1.0), axis=1))
            orders[:, position] = chosen
            in_vase[rows, chosen] = False
        return [Ranking(tuple(row)) for row in orders.tolist()]

    def mode(self) -> Ranking:
        # Decreasing weight; stable sort keeps the smaller label first on ties.
        return Ranking(tuple(int(label) for label in np.argsort(-self._weights, kind="stable")))


class PlackettLuceEstimator(IRankingEstimator):
    """
    Minorization-maximization (Hunter's MM) maximum-likelihood fit:

        v_i <- w_i / sum_n sum_{t <= min(rank_n(i), M-1)} 1 / (v_{pi_n(t)} + ... + v_{pi_n(M)})

    where w_i counts the rankings in which i is not last. Weights are
    normalised every iteration and clamped to a positivity floor.
    """

    def __init__(
        self,
        tolerance: float = settings.PL_TOLERANCE,
        max_iterations: int = settings.PL_MAX_ITERATIONS,
        weight_floor: float = settings.WEIGHT_FLOOR,
        track_likelihood: bool = False,
    ):
        self.tolerance = tolerance
        self.track_likelihood = track_likelihood
        self.max_iterations = max_iterations
        self.weight_floor = weight_floor

    def _clamp(self, weights: np.ndarray) -> tuple[np.ndarray, bool]:
        clamped = weights < self.weight_floor
        weights = np.where(clamped, self.weight_floor, weights)
        return weights / weights.sum(), bool(np.any(clamped))

    def fit(self, rankings: Sequence[Ranking]) -> tuple[PLModel, FitReport]:
        try:
            orders = stack_orders(rankings)
        except RankingError as e:
            raise FitError(f"Cannot fit a Plackett-Luce model: {e}") from e

        n, m = orders.shape
        if m == 1:
            return PLModel((1.0,)), self.report(0, True, 0.0, False, (0.0,))

        wins = np.bincount(orders[:, :-1].ravel(), minlength=m).astype(float)
        weights = np.full(m, 1.0 / m)
        trace = [pl_log_likelihood(weights, orders)]
        boundary_hit, converged, iterations = False, False, 0

        while iterations < self.max_iterations:
            iterations += 1
            inverse_suffix = 1.0 / _suffix_sums(weights[orders])[:, :-1]
            # Label on position p takes part in stages 0..min(p, M-2).
            stage_totals = np.cumsum(inverse_suffix, axis=1)
            per_position = np.concatenate([stage_totals, stage_totals[:, -1:]], axis=1)
            denominators = np.bincount(orders.ravel(), weights=per_position.ravel(), minlength=m)

            updated, clamped = self._clamp((wins / denominators) / np.sum(wins / denominators))
            boundary_hit = boundary_hit or clamped
            change = float(np.max(np.abs(updated - weights) / weights))
            weights = updated
            if self.track_likelihood:
                trace.append(pl_log_likelihood(weights, orders))
            if change < self.tolerance:
                converged = True
                break

        if not converged:
            log.debug(f"Plackett-Luce MM did not converge within {self.max_iterations} iterations (N={n}, M={m}).")
        log.debug(f"Plackett-Luce fit: {iterations} iterations, weights={np.round(weights, 6).tolist()}")
        final_log_likelihood = trace[-1] if self.track_likelihood else pl_log_likelihood(weights, orders)
        return PLModel(tuple(weights)), self.report(iterations, converged, final_log_likelihood, boundary_hit, trace)
