from typing import Callable, Sequence

import numpy as np

from ...abstention.domain.interfaces import IPartialOrderPredictor
from ...abstention.domain.models import Threshold
from ...abstention.exceptions.errors import InvalidThresholdError
from ...learners.domain.models import Dataset, Method
from ...rankings.domain.models import ValuedPreferenceRelation
from .metrics import completeness, gamma_correctness
from .models import (
    CrossValidationResult,
    InstanceResult,
    SweepResult,
    TradeoffCurve,
    TradeoffPoint,
)
from ..exceptions.errors import FoldError, InvalidGridError

RelationPredictor = Callable[[Dataset, np.ndarray], list[ValuedPreferenceRelation]]


def validate_grid(grid: Sequence[Threshold | float]) -> tuple[Threshold, ...]:
    if len(grid) == 0:
        raise InvalidGridError("The threshold grid is empty.")
    try:
        thresholds = tuple(Threshold.of(q) for q in grid)
    except InvalidThresholdError as e:
        raise InvalidGridError(f"Invalid threshold grid: {e}") from e
    if any(b <= a for a, b in zip(thresholds, thresholds[1:])):
        raise InvalidGridError(f"Grid values must be strictly increasing, got {[t.q for t in thresholds]}.")
    return thresholds


def _std(values: list[float]) -> float | None:
    return float(np.std(values, ddof=1)) if len(values) >= 2 else None


class SweepUseCase:
    """
    Train once, build one valued relation per test instance, then
    threshold each relation at every q of the grid.
    """

    def __init__(self, method: Method, relation_predictor: RelationPredictor,
                 predictor: IPartialOrderPredictor):
        self._method = Method(method)
        self._relation_predictor = relation_predictor
        self._predictor = predictor

    def execute(self, train: Dataset, test: Dataset, grid: Sequence[Threshold | float],
                fold: int = -1, instance_ids: Sequence[int] | None = None) -> SweepResult:
        thresholds = validate_grid(grid)
        relations = self._relation_predictor(train, test.features)
        ids = list(range(test.N)) if instance_ids is None else [int(i) for i in instance_ids]

        points, instances = [], []
        for q in thresholds:
            complete, correct = [], []
            for instance, truth, relation in zip(ids, test.rankings, relations):
                prediction = self._predictor.predict(relation, q)
                c = completeness(prediction.order)
                g = gamma_correctness(truth, prediction.order)
                complete.append(c)
                if g is not None:
                    correct.append(g)
                instances.append(InstanceResult(
                    instance=instance,
                    q=q.q,
                    completeness=c,
                    correctness=g,
                    effective_q=prediction.effective_q.q,
                    repaired=prediction.repaired,
                    fold=fold,
                ))
            points.append(TradeoffPoint(
                q=q,
                completeness=float(np.mean(complete)),
                # Fully abstained instances have no gamma; they are excluded, never imputed.
                correctness=float(np.mean(correct)) if correct else None,
                n_evaluated=len(correct),
            ))
        return SweepResult(
            curve=TradeoffCurve(method=self._method, points=tuple(points), fold=fold),
            instances=tuple(instances),
        )


class CrossValidateUseCase:
    """Seeded fold assignment, one sweep per fold, pointwise mean and std."""

    def __init__(self, sweep: SweepUseCase):
        self._sweep = sweep

    @staticmethod
    def assign_folds(n: int, folds: int, rng_seed: int) -> tuple[int, ...]:
        if folds < 2:
            raise FoldError(f"Cross-validation needs at least 2 folds, got {folds}.")
        if folds > n:
            raise FoldError(f"Cannot split {n} instances into {folds} non-empty folds.")
        assignment = np.empty(n, dtype=np.int64)
        shuffled = np.random.default_rng(rng_seed).permutation(n)
        for fold, rows in enumerate(np.array_split(shuffled, folds)):
            assignment[rows] = fold
        return tuple(int(f) for f in assignment)

    def execute(self, data: Dataset, folds: int, grid: Sequence[Threshold | float], rng_seed: int,
                assignment: Sequence[int] | None = None) -> CrossValidationResult:
        thresholds = validate_grid(grid)
        if assignment is None:
            assignment = self.assign_folds(data.N, folds, rng_seed)
        elif len(assignment) != data.N or sorted(set(assignment)) != list(range(folds)):
            raise FoldError(f"A fold assignment must give each of the {data.N} rows one of {folds} folds.")
        assignment = np.asarray(assignment)

        fold_results = []
        for fold in range(folds):
            test_rows = np.flatnonzero(assignment == fold)
            train_rows = np.flatnonzero(assignment != fold)
            fold_results.append(self._sweep.execute(
                data.subset(train_rows), data.subset(test_rows), thresholds,
                fold=fold, instance_ids=test_rows,
            ))

        mean_points = []
        for index, q in enumerate(thresholds):
            fold_points = [result.curve.points[index] for result in fold_results]
            complete = [p.completeness for p in fold_points]
            correct = [p.correctness for p in fold_points if p.correctness is not None]
            mean_points.append(TradeoffPoint(
                q=q,
                completeness=float(np.mean(complete)),
                correctness=float(np.mean(correct)) if correct else None,
                n_evaluated=sum(p.n_evaluated for p in fold_points),
                completeness_std=_std(complete),
                correctness_std=_std(correct),
            ))

        method = fold_results[0].curve.method
        return CrossValidationResult(
            mean=TradeoffCurve(method=method, points=tuple(mean_points), fold=-1),
            folds=tuple(result.curve for result in fold_results),
            assignment=tuple(int(f) for f in assignment),
            instances=tuple(instance for result in fold_results for instance in result.instances),
        )
