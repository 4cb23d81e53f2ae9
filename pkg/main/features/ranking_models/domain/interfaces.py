from abc import ABC, abstractmethod
from typing import Sequence

import numpy as np

from ...rankings.domain.models import Ranking
from .models import FitReport


class IRankingDistribution(ABC):
    """
    A parameterized probability distribution over the M! rankings.
    This is the "Port" the abstention and learner use cases depend on.
    """

    @property
    @abstractmethod
    def M(self) -> int:
        pass

    @abstractmethod
    def log_pdf_batch(self, orders: np.ndarray) -> np.ndarray:
        """
        Log-probabilities of many rankings at once.

        Args:
            orders: (n, M) integer array, one ranking (label per position) per row.
        """
        pass

    def log_pdf(self, ranking: Ranking) -> float:
        return float(self.log_pdf_batch(ranking.as_array()[None, :])[0])

    @abstractmethod
    def pairwise_marginal(self, i: int, j: int) -> float:
        """
        Probability that label i precedes label j.

        Raises:
            InvalidPairError: If i == j or either label is out of range.
        """
        pass

    def preference_matrix(self) -> np.ndarray:
        """All pairwise marginals as an M x M matrix (diagonal 0.5)."""
        m = self.M
        matrix = np.full((m, m), 0.5)
        for i in range(m):
            for j in range(i + 1, m):
                p = self.pairwise_marginal(i, j)
                matrix[i, j] = p
                matrix[j, i] = 1.0 - p
        return matrix

    @abstractmethod
    def sample(self, n: int, rng: np.random.Generator) -> list[Ranking]:
        pass

    @abstractmethod
    def mode(self) -> Ranking:
        """A most probable ranking."""
        pass


class IRankingEstimator(ABC):
    """
    An abstract maximum-likelihood estimator for a ranking model.
    """

    @abstractmethod
    def fit(self, rankings: Sequence[Ranking]):
        """
        Fits the model to complete rankings over a common label set.

        Returns:
            A (model, FitReport) pair.

        Raises:
            FitError: If the input is empty or mixes label counts.
        """
        pass

    @staticmethod
    def report(iterations: int, converged: bool, log_likelihood: float, boundary_hit: bool,
               trace: Sequence[float] = ()) -> FitReport:
        return FitReport(
            iterations=iterations,
            converged=converged,
            log_likelihood=float(log_likelihood),
            boundary_hit=boundary_hit,
            log_likelihood_trace=tuple(float(value) for value in trace),
        )
