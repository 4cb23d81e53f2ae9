"""
This is the Service Layer - The only Public API for the evaluation feature.

Its responsibilities:
1.  Expose the correctness / completeness metrics.
2.  Perform Dependency Injection: wire the learner for a method tag and
    the matching partial-order predictor (strict thresholding for the
    probabilistic methods, q_min + closure for the ensemble baseline)
    into the sweep and cross-validation use cases.
"""

import logging
from functools import partial
from typing import Sequence

from ...abstention.domain.models import Threshold
from ...abstention.service.api import predictor_for
from ...learners.domain.models import Dataset, LearnerConfig, Method
from ...learners.service.api import predict_relations
from ...rankings.domain.models import Ranking, StrictRelation

from ..domain import metrics
from ..domain.models import CrossValidationResult, SweepResult, TradeoffCurve
from ..domain.use_case import CrossValidateUseCase, SweepUseCase

from ..config import settings
from ..exceptions.errors import EvaluationError

log = logging.getLogger(__name__)
log.setLevel(settings.LOG_LEVEL)
if not log.handlers:
    log.addHandler(logging.StreamHandler())
    log.handlers[0].setLevel(settings.LOG_LEVEL)


def gamma_correctness(truth: Ranking, pred: StrictRelation) -> float | None:
    """(C - D) / (C + D) over the asserted pairs; None on total abstention."""
    return metrics.gamma_correctness(truth, pred)


def completeness(pred: StrictRelation) -> float:
    """Asserted unordered pairs / (M(M-1)/2)."""
    return metrics.completeness(pred)


def _sweep_use_case(method: Method, cfg: LearnerConfig) -> SweepUseCase:
    method = Method(method)
    # --- Dependency Injection ---
    return SweepUseCase(
        method=method,
        relation_predictor=partial(predict_relations, method=method, cfg=cfg),
        predictor=predictor_for(repair=not method.is_probabilistic),
    )


def sweep_detailed(train: Dataset, test: Dataset, method: Method, cfg: LearnerConfig,
                   q_grid: Sequence[Threshold | float] = settings.DEFAULT_Q_GRID) -> SweepResult:
    """Like `sweep`, also returning the per-instance results."""
    log.info(f"Sweeping {Method(method).value} over {len(q_grid)} thresholds "
             f"(train N={train.N}, test N={test.N}).")
    try:
        return _sweep_use_case(method, cfg).execute(train, test, q_grid)
    except EvaluationError as e:
        log.error(f"Sweep failed: {e}")
        raise


def sweep(train: Dataset, test: Dataset, method: Method, cfg: LearnerConfig,
          q_grid: Sequence[Threshold | float] = settings.DEFAULT_Q_GRID) -> TradeoffCurve:
    """
    Mean completeness and mean gamma (over instances where it is defined)
    at every threshold of the grid.

    Raises:
        InvalidGridError: If the grid is empty, unordered or leaves [0.5, 1).
    """
    return sweep_detailed(train, test, method, cfg, q_grid).curve


def cross_validate(data: Dataset, folds: int, method: Method, cfg: LearnerConfig,
                   q_grid: Sequence[Threshold | float] = settings.DEFAULT_Q_GRID,
                   assignment: Sequence[int] | None = None) -> CrossValidationResult:
    """
    Seeded (cfg.rng_seed) fold assignment, one sweep per fold, and the
    pointwise mean / standard deviation across folds. An explicit
    `assignment` (fold index per row) overrides the seeded one.

    Raises:
        FoldError: If folds < 2 or folds > N.
    """
    log.info(f"Cross-validating {Method(method).value} with {folds} folds on N={data.N}.")
    use_case = CrossValidateUseCase(_sweep_use_case(method, cfg))

    # --- Execute ---
    try:
        return use_case.execute(
            data, folds, q_grid, rng_seed=cfg.rng_seed, assignment=assignment,
        )
    except EvaluationError as e:
        log.error(f"Cross-validation failed: {e}")
        raise
