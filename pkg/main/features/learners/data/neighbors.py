"""
Euclidean k-nearest-neighbor search on standardized features.
"""
import numpy as np

from ..domain.models import Dataset
from ..exceptions.errors import FeatureDimensionError, LearnerError, NeighborCountError


class Standardizer:
    """Per-feature z-scores with statistics from the training rows only."""

    def __init__(self, features: np.ndarray):
        self.mean = features.mean(axis=0)
        scale = features.std(axis=0)
        # Constant columns keep unit scale.
        self.scale = np.where(scale > 0.0, scale, 1.0)

    def transform(self, features: np.ndarray) -> np.ndarray:
        return (features - self.mean) / self.scale


class NearestNeighbors:
    """
    Returns training rows ordered by distance to a query; equal distances
    are broken by the smaller training-row index.
    """

    def __init__(self):
        self._train: Dataset | None = None

    def fit(self, train: Dataset) -> "NearestNeighbors":
        self._train = train
        self._standardizer = Standardizer(train.features)
        self._points = self._standardizer.transform(train.features)
        return self

    @property
    def train(self) -> Dataset:
        if self._train is None:
            raise LearnerError("NearestNeighbors must be fitted before querying.")
        return self._train

    def query(self, x: np.ndarray, k: int) -> np.ndarray:
        train = self.train
        x = np.asarray(x, dtype=float).reshape(-1)
        if x.shape[0] != train.d:
            raise FeatureDimensionError(f"Query has {x.shape[0]} features, the training data has {train.d}.")
        if k > train.N:
            raise NeighborCountError(f"Requested k={k} neighbors from {train.N} training instances.")
        if k < 1:
            raise NeighborCountError(f"k must be at least 1, got {k}.")

        squared = np.sum((self._points - self._standardizer.transform(x)) ** 2, axis=1)
        # Stable sort on the distance keeps the smaller row index first on ties.
        return np.argsort(squared, kind="stable")[:k]
