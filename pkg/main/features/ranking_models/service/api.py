"""
This is the Service Layer - The only Public API for the ranking_models feature.

Its responsibilities:
1.  Provide the model operations (densities, marginals, sampling, fitting)
    as plain functions over the MallowsModel / PLModel records.
2.  Perform Dependency Injection: pick the concrete distribution or
    estimator (from the `data` layer) for a model record and inject it
    into the use cases (from the `domain` layer).
3.  Log feature errors before re-raising them.
"""

import logging
from typing import Sequence

import numpy as np

from ...rankings.domain.aggregation import stack_orders
from ...rankings.domain.models import Ranking, ValuedPreferenceRelation
from ...rankings.exceptions.errors import DimensionMismatchError

from ..data.mallows import (
    MallowsDistribution,
    MallowsEstimator,
    mallows_expected_distance as _mallows_expected_distance,
    mallows_log_normalizer as _mallows_log_normalizer,
)
from ..data.plackett_luce import PlackettLuceDistribution, PlackettLuceEstimator

from ..domain.interfaces import IRankingDistribution
from ..domain.models import FitReport, MallowsModel, PLModel
from ..domain.use_case import (
    BuildPreferenceRelationUseCase,
    EnumeratedMarginalUseCase,
    FitRankingModelUseCase,
)

from ..config import settings
from ..exceptions.errors import InvalidModelError, RankingModelError

log = logging.getLogger(__name__)
log.setLevel(settings.LOG_LEVEL)
if not log.handlers:
    log.addHandler(logging.StreamHandler())
    log.handlers[0].setLevel(settings.LOG_LEVEL)

RankingModel = MallowsModel | PLModel


def distribution_for(model: RankingModel) -> IRankingDistribution:
    """Maps a parameter record to its concrete distribution."""
    if isinstance(model, MallowsModel):
        return MallowsDistribution(model)
    if isinstance(model, PLModel):
        return PlackettLuceDistribution(model)
    raise InvalidModelError(f"Unsupported ranking model: {type(model).__name__}")


def _check_dimension(model: RankingModel, pi: Ranking) -> None:
    if pi.M != model.M:
        raise DimensionMismatchError(f"Ranking over {pi.M} labels given to a model over {model.M}.")


# --- Densities ---

def mallows_log_normalizer(theta: float, m: int) -> float:
    """ln phi(theta) for Kendall's distance over M labels."""
    return _mallows_log_normalizer(theta, m)


def mallows_expected_distance(theta: float, m: int) -> float:
    """Expected Kendall distance to the center, -d/dtheta ln phi(theta)."""
    return _mallows_expected_distance(theta, m)


def mallows_log_pdf(model: MallowsModel, pi: Ranking) -> float:
    _check_dimension(model, pi)
    return MallowsDistribution(model).log_pdf(pi)


def pl_log_pdf(model: PLModel, pi: Ranking) -> float:
    _check_dimension(model, pi)
    return PlackettLuceDistribution(model).log_pdf(pi)


def log_likelihood(model: RankingModel, rankings: Sequence[Ranking]) -> float:
    orders = stack_orders(rankings)
    if orders.shape[1] != model.M:
        raise DimensionMismatchError(f"Rankings over {orders.shape[1]} labels given to a model over {model.M}.")
    return float(np.sum(distribution_for(model).log_pdf_batch(orders)))


def mode_ranking(model: RankingModel) -> Ranking:
    return distribution_for(model).mode()


# --- Pairwise marginals ---

def pairwise_marginal(model: RankingModel, i: int, j: int) -> float:
    """
    P(y_i > y_j). Closed form for Plackett-Luce, gap-cached enumeration
    for Mallows.

    Raises:
        InvalidPairError: If i == j.
        EnumerationCapError: If a Mallows model is over more labels than
                             the enumeration cap.
    """
    return distribution_for(model).pairwise_marginal(i, j)


def enumerated_pairwise_marginal(model: RankingModel, i: int, j: int) -> float:
    """P(y_i > y_j) by summing P(pi) over all linear extensions of y_i > y_j."""
    return EnumeratedMarginalUseCase(distribution_for(model)).execute(i, j)


def build_preference_relation(model: RankingModel) -> ValuedPreferenceRelation:
    log.debug(f"Building the preference relation of {model}")
    try:
        return BuildPreferenceRelationUseCase(distribution_for(model)).execute()
    except RankingModelError as e:
        log.error(f"Could not build the preference relation: {e}")
        raise


# --- Sampling ---

def sample_mallows(model: MallowsModel, n: int, rng_seed: int | np.random.Generator) -> list[Ranking]:
    """n independent draws by repeated insertion; deterministic given the seed."""
    return MallowsDistribution(model).sample(n, np.random.default_rng(rng_seed))


def sample_pl(model: PLModel, n: int, rng_seed: int | np.random.Generator) -> list[Ranking]:
    """n independent vase-model draws; deterministic given the seed."""
    return PlackettLuceDistribution(model).sample(n, np.random.default_rng(rng_seed))


# --- Fitting ---

def fit_pl(rankings: Sequence[Ranking], track_likelihood: bool = False) -> tuple[PLModel, FitReport]:
    """
    Maximum-likelihood Plackett-Luce weights by minorization-maximization.
    With `track_likelihood` the report carries the log-likelihood of every
    iterate.

    Raises:
        FitError: If the input is empty or mixes label counts.
    """
    log.debug(f"Fitting a Plackett-Luce model to {len(rankings)} rankings.")
    try:
        model, report = FitRankingModelUseCase(
            estimator=PlackettLuceEstimator(track_likelihood=track_likelihood)
        ).execute(rankings)
    except RankingModelError as e:
        log.error(f"Plackett-Luce fit failed: {e}")
        raise
    log.debug(f"Plackett-Luce fit report: {report}")
    return model, report


def fit_mallows(rankings: Sequence[Ranking]) -> tuple[MallowsModel, FitReport]:
    """
    Borda center plus moment-matched spread.

    Raises:
        FitError: If the input is empty or mixes label counts.
    """
    log.debug(f"Fitting a Mallows model to {len(rankings)} rankings.")
    try:
        model, report = FitRankingModelUseCase(estimator=MallowsEstimator()).execute(rankings)
    except RankingModelError as e:
        log.error(f"Mallows fit failed: {e}")
        raise
    log.debug(f"Mallows fit report: {report}")
    return model, report
