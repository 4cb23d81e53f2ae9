"""
Mallows model under Kendall's distance, backed by numpy / scipy.

The normalizer uses the product form
    phi(theta) = prod_{j=1..M} (1 - e^{-j theta}) / (1 - e^{-theta}),
which is also what the repeated-insertion sampler draws from: the j-th
inserted label lands d places before the end with probability
proportional to e^{-theta d}, d = 0..j-1.
"""
import logging
from functools import lru_cache
from typing import Sequence

import numpy as np
from scipy.optimize import bisect
from scipy.special import gammaln

from ...rankings.domain.aggregation import borda_aggregate, stack_orders
from ...rankings.domain.distances import inversion_counts, kendall_distances_to
from ...rankings.domain.enumeration import all_orders, check_enumerable
from ...rankings.domain.models import Ranking
from ...rankings.exceptions.errors import RankingError
from ..domain.interfaces import IRankingDistribution, IRankingEstimator
from ..domain.models import FitReport, MallowsModel
from ..exceptions.errors import FitError, InvalidPairError
from ..config import settings

log = logging.getLogger(__name__)
log.setLevel(settings.LOG_LEVEL)
if not log.handlers:
    log.addHandler(logging.StreamHandler())
    log.handlers[0].setLevel(settings.LOG_LEVEL)


def mallows_log_normalizer(theta: float, m: int) -> float:
    """ln phi(theta); ln M! at theta = 0."""
    if m <= 1:
        return 0.0
    if theta == 0.0:
        return float(gammaln(m + 1))
    j = np.arange(1, m + 1, dtype=float)
    return float(np.sum(np.log(-np.expm1(-j * theta)) - np.log(-np.expm1(-theta))))


def mallows_expected_distance(theta: float, m: int) -> float:
    """
    E_theta[D(pi, pi0)] = -d/dtheta ln phi(theta), differentiated analytically:
        sum_{j=1..M} [ 1/(e^theta - 1) - j/(e^{j theta} - 1) ].
    """
    if m <= 1:
        return 0.0
    if theta < 1e-6:
        # First-order expansion around the uniform distribution; the exact
        # form cancels catastrophically here.
        return m * (m - 1) / 4.0 - theta * m * (m - 1) * (2 * m + 5) / 72.0
    j = np.arange(1, m + 1, dtype=float)
    return float(np.sum(1.0 / np.expm1(theta) - j / np.expm1(j * theta)))


@lru_cache(maxsize=settings.MARGINAL_CACHE_SIZE)
def _gap_marginals(theta: float, m: int) -> tuple[float, ...]:
    """
    P(label at center position a precedes label at center position a + g)
    for g = 0..M-1 (entry 0 unused). Under Kendall's distance this depends
    only on (theta, M, g), so one enumeration serves the whole relation.
    """
    orders = all_orders(m)
    probabilities = np.exp(-theta * inversion_counts(orders) - mallows_log_normalizer(theta, m))
    positions = np.argsort(orders, axis=1)
    gaps = [0.5]
    for gap in range(1, m):
        gaps.append(float(np.sum(probabilities[positions[:, 0] < positions[:, gap]])))
    return tuple(gaps)


class MallowsDistribution(IRankingDistribution):
    """
    A concrete implementation of IRankingDistribution for the Mallows model.
    """

    def __init__(self, model: MallowsModel):
        self.model = model
        self._log_normalizer = mallows_log_normalizer(model.theta, model.M)

    @property
    def M(self) -> int:
        return self.model.M

    def log_pdf_batch(self, orders: np.ndarray) -> np.ndarray:
        distances = kendall_distances_to(orders, self.model.center)
        return -self.model.theta * distances - self._log_normalizer

    def _check_pair(self, i: int, j: int) -> None:
        if i == j:
            raise InvalidPairError(f"A pairwise marginal needs two distinct labels, got i = j = {i}.")
        if not (0 <= i < self.M and 0 <= j < self.M):
            raise InvalidPairError(f"Labels ({i}, {j}) out of range for M={self.M}.")

    def pairwise_marginal(self, i: int, j: int) -> float:
        self._check_pair(i, j)
        try:
            check_enumerable(self.M)
        except RankingError as e:
            log.error(f"Mallows marginal for M={self.M} needs enumeration: {e}")
            raise
        if self.model.theta == 0.0:
            return 0.5
        gap = self.model.center.position_of(j) - self.model.center.position_of(i)
        table = _gap_marginals(self.model.theta, self.M)
        return table[gap] if gap > 0 else 1.0 - table[-gap]

    def preference_matrix(self) -> np.ndarray:
        m = self.M
        check_enumerable(m)
        if self.model.theta == 0.0:
            return np.full((m, m), 0.5)
        table = np.asarray(_gap_marginals(self.model.theta, m))
        positions = np.asarray(self.model.center.positions)
        gap = positions[None, :] - positions[:, None]
        matrix = np.where(gap > 0, table[np.abs(gap)], 1.0 - table[np.abs(gap)])
        np.fill_diagonal(matrix, 0.5)
        return matrix

    def sample(self, n: int, rng: np.random.Generator) -> list[Ranking]:
        """Repeated insertion: no enumeration, O(n M^2)."""
        m = self.M
        inserted = [[] for _ in range(n)]
        for j in range(m):
            # Label j (in center coordinates) lands `back` places before the end.
            back_weights = np.exp(-self.model.theta * np.arange(j + 1))
            backs = rng.choice(j + 1, size=n, p=back_weights / back_weights.sum())
            for sequence, back in zip(inserted, backs):
                sequence.insert(j - int(back), j)
        center = self.model.center.order
        return [Ranking(tuple(center[k] for k in sequence)) for sequence in inserted]

    def mode(self) -> Ranking:
        return self.model.center


class MallowsEstimator(IRankingEstimator):
    """
    Center by Borda count; theta by solving the moment equation
    mean D(pi_n, pi0) = E_theta[D] with bisection on [0, theta_max].
    """

    def __init__(self, theta_max: float = settings.THETA_MAX, xtol: float = settings.THETA_XTOL):
        self.theta_max = theta_max
        self.xtol = xtol

    def fit(self, rankings: Sequence[Ranking]) -> tuple[MallowsModel, FitReport]:
        try:
            orders = stack_orders(rankings)
        except RankingError as e:
            raise FitError(f"Cannot fit a Mallows model: {e}") from e

        m = orders.shape[1]
        center = borda_aggregate(rankings)
        distances = kendall_distances_to(orders, center)
        mean_distance = float(distances.mean())
        log.debug(f"Mallows fit: N={len(rankings)}, M={m}, center={center}, mean distance={mean_distance:.6g}")

        iterations, converged, boundary_hit = 0, True, False
        if mean_distance >= mallows_expected_distance(0.0, m):
            theta = 0.0
        elif mean_distance <= mallows_expected_distance(self.theta_max, m):
            theta, boundary_hit = self.theta_max, True
        else:
            theta, result = bisect(
                lambda t: mallows_expected_distance(t, m) - mean_distance,
                0.0,
                self.theta_max,
                xtol=self.xtol,
                full_output=True,
                disp=False,
            )
            iterations, converged = result.iterations, result.converged

        model = MallowsModel(center=center, theta=float(theta))
        log_likelihood = -theta * float(distances.sum()) - len(rankings) * mallows_log_normalizer(theta, m)
        return model, self.report(iterations, converged, log_likelihood, boundary_hit, (log_likelihood,))
