"""
Synthetic label-ranking generators with a known ground truth.
"""
import numpy as np

from ...learners.domain.models import Dataset
from ...ranking_models.data.mallows import MallowsDistribution
from ...ranking_models.data.plackett_luce import PlackettLuceDistribution
from ...ranking_models.domain.models import MallowsModel, PLModel
from ...rankings.domain.models import Ranking
from ..domain.interfaces import IDatasetGenerator
from ..domain.models import SynthSpec

# exp() of anything below this underflows to a zero weight
_LOG_WEIGHT_FLOOR = -700.0


def _names(spec: SynthSpec) -> tuple[tuple[str, ...], tuple[str, ...]]:
    return (
        tuple(f"L{i + 1}" for i in range(spec.m)),
        tuple(f"x{j + 1}" for j in range(spec.d)),
    )


class LinearPLGenerator(IDatasetGenerator):
    """PL weights log-linear in the features, plus optional Gaussian noise."""

    def generate(self, spec: SynthSpec, rng: np.random.Generator) -> Dataset:
        features = rng.standard_normal((spec.n, spec.d))
        coefficients = rng.standard_normal((spec.m, spec.d))
        scores = spec.weight_scale * features @ coefficients.T
        if spec.noise > 0:
            scores = scores + spec.noise * rng.standard_normal(scores.shape)
        scores = np.maximum(scores - scores.max(axis=1, keepdims=True), _LOG_WEIGHT_FLOOR)

        rankings = []
        for row in np.exp(scores):
            distribution = PlackettLuceDistribution(PLModel(tuple(row)))
            rankings.append(distribution.sample(1, rng)[0])
        label_names, feature_names = _names(spec)
        return Dataset(features, tuple(rankings), label_names, feature_names)


class MallowsRegionsGenerator(IDatasetGenerator):
    """
    Piecewise-constant Mallows data: the nearest of `regions` random
    prototypes decides the center ranking.
    """

    @staticmethod
    def draw_layout(spec: SynthSpec, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray, list[Ranking]]:
        """Feature points, region prototypes and one center ranking per region, in draw order."""
        features = rng.standard_normal((spec.n, spec.d))
        prototypes = rng.standard_normal((spec.regions, spec.d))
        centers = [Ranking(tuple(int(label) for label in rng.permutation(spec.m))) for _ in range(spec.regions)]
        return features, prototypes, centers

    def generate(self, spec: SynthSpec, rng: np.random.Generator) -> Dataset:
        features, prototypes, centers = self.draw_layout(spec, rng)
        if spec.noise > 0:
            located = features + spec.noise * rng.standard_normal(features.shape)
        else:
            located = features
        distances = ((located[:, None, :] - prototypes[None, :, :]) ** 2).sum(axis=2)
        regions = np.argmin(distances, axis=1)

        rankings: list[Ranking | None] = [None] * spec.n
        for region, center in enumerate(centers):
            rows = np.flatnonzero(regions == region)
            if rows.size == 0:
                continue
            draws = MallowsDistribution(MallowsModel(center, spec.theta)).sample(rows.size, rng)
            for row, ranking in zip(rows, draws):
                rankings[int(row)] = ranking
        label_names, feature_names = _names(spec)
        return Dataset(features, tuple(rankings), label_names, feature_names)
