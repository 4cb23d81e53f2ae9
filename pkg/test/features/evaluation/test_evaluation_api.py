# File: test/features/evaluation/test_evaluation_api.py
import logging
import time

import numpy as np
import pytest

from main.features.evaluation.service.api import completeness, cross_validate, gamma_correctness, sweep
from main.features.evaluation.domain.models import TradeoffCurve, TradeoffPoint
from main.features.evaluation.domain.use_case import CrossValidateUseCase, SweepUseCase
from main.features.evaluation.exceptions.errors import FoldError, InvalidGridError
from main.features.abstention.domain.models import Threshold
from main.features.abstention.service.api import predictor_for
from main.features.learners.domain.models import Dataset, LearnerConfig, Method
from main.features.ranking_models.domain.models import PLModel
from main.features.ranking_models.service.api import sample_pl
from main.features.rankings.domain.models import PartialOrder, Ranking, StrictRelation, ValuedPreferenceRelation
from main.features.rankings.exceptions.errors import DimensionMismatchError
from main.features.rankings.service.api import transitive_closure

log = logging.getLogger(__name__)


def pl_dataset(seed: int, n: int, m: int = 4) -> Dataset:
    """Rankings from a PL model whose weights vary smoothly with a single feature."""
    rng = np.random.default_rng(seed)
    x = rng.uniform(-2.0, 2.0, size=n)
    slopes = np.linspace(-1.5, 1.5, m)
    rankings = [sample_pl(PLModel(tuple(np.exp(slopes * xi))), 1, rng)[0] for xi in x]
    return Dataset(
        features=x[:, None],
        rankings=tuple(rankings),
        label_names=tuple(f"L{i + 1}" for i in range(m)),
        feature_names=("x1",),
    )


def constant_relations(matrix_for_row):
    """A relation predictor that ignores training data."""
    def predict(train: Dataset, queries: np.ndarray) -> list[ValuedPreferenceRelation]:
        return [ValuedPreferenceRelation(matrix_for_row(row)) for row in range(len(queries))]
    return predict


# --- Metrics ---

def test_gamma_correctness_examples():
    """Agreement, reversal, and one concordant plus one discordant pair."""
    truth = Ranking((0, 1, 2))
    assert gamma_correctness(truth, StrictRelation.from_ranking(truth)) == 1.0
    assert gamma_correctness(truth, StrictRelation.from_ranking(truth.reversed())) == -1.0
    assert gamma_correctness(truth, StrictRelation.from_pairs(3, [(0, 1), (2, 1)])) == 0.0


def test_gamma_correctness_undefined_on_total_abstention():
    """No asserted pair, no gamma."""
    assert gamma_correctness(Ranking((1, 0, 2)), StrictRelation.empty(3)) is None


def test_gamma_correctness_dimension_mismatch():
    """Truth and prediction must cover the same labels."""
    with pytest.raises(DimensionMismatchError):
        gamma_correctness(Ranking((0, 1)), StrictRelation.empty(3))


def test_gamma_is_one_for_every_truth_and_unchanged_by_closing_a_transitive_order():
    """gamma(truth, truth) = 1; a transitive prediction equals its closure."""
    rng = np.random.default_rng(0)
    for _ in range(50):
        m = int(rng.integers(2, 7))
        truth = Ranking(tuple(rng.permutation(m)))
        assert gamma_correctness(truth, StrictRelation.from_ranking(truth)) == 1.0
        other = StrictRelation.from_ranking(Ranking(tuple(rng.permutation(m))))
        partial = transitive_closure(StrictRelation(other.edges & (rng.random((m, m)) < 0.5)))
        assert isinstance(partial, PartialOrder)
        assert gamma_correctness(truth, transitive_closure(partial)) == gamma_correctness(truth, partial)


def test_completeness_examples():
    """Total order, empty order, and half of the pairs of 4 labels."""
    assert completeness(StrictRelation.from_ranking(Ranking((2, 0, 1, 3)))) == 1.0
    assert completeness(StrictRelation.empty(4)) == 0.0
    assert completeness(StrictRelation.from_pairs(4, [(0, 1), (0, 2), (0, 3)])) == 0.5


# --- Curve records ---

def test_curve_thresholds_strictly_increase():
    """Points must be ordered by strictly increasing q."""
    point = TradeoffPoint(q=Threshold(0.6), completeness=0.5, correctness=0.2, n_evaluated=3)
    with pytest.raises(InvalidGridError):
        TradeoffCurve(method=Method.PROBABILISTIC_PL, points=(point, point))


# --- Sweep ---

def test_sweep_with_a_total_order_predictor():
    """q = 0.5 and a crisp relation equal to the truth: completeness 1, correctness 1."""
    data = pl_dataset(seed=1, n=12)

    def truth_matrix(row: int) -> np.ndarray:
        return StrictRelation.from_ranking(data.rankings[row]).edges.astype(float)

    use_case = SweepUseCase(Method.BASELINE_ENSEMBLE, constant_relations(truth_matrix), predictor_for(repair=True))
    curve = use_case.execute(data, data, [0.5]).curve
    (point,) = curve.points
    assert point.completeness == 1.0
    assert point.correctness == 1.0
    assert point.n_evaluated == data.N


def test_sweep_with_a_uniform_predictor_abstains_everywhere():
    """All marginals 0.5: completeness 0 and no correctness at every q."""
    data = pl_dataset(seed=2, n=8)
    use_case = SweepUseCase(
        Method.PROBABILISTIC_MALLOWS,
        constant_relations(lambda row: np.full((4, 4), 0.5)),
        predictor_for(repair=False),
    )
    result = use_case.execute(data, data, [0.5, 0.7, 0.9])
    for point in result.curve.points:
        assert point.completeness == 0.0
        assert point.correctness is None
        assert point.n_evaluated == 0
    assert len(result.instances) == 3 * data.N
    assert all(instance.correctness is None for instance in result.instances)


@pytest.mark.parametrize("grid", [[], [0.6, 0.5], [0.5, 0.5], [0.5, 1.0], [0.4, 0.6]])
def test_sweep_rejects_invalid_grids(grid):
    """Empty, unordered, repeated or out-of-range grids."""
    data = pl_dataset(seed=3, n=10)
    with pytest.raises(InvalidGridError):
        sweep(data, data, Method.PROBABILISTIC_PL, LearnerConfig(k=3), grid)


def test_sweep_completeness_is_non_increasing_for_the_probabilistic_method():
    """Monotone abstention aggregates to the mean completeness."""
    train, test = pl_dataset(seed=4, n=120), pl_dataset(seed=5, n=40)
    curve = sweep(train, test, Method.PROBABILISTIC_PL, LearnerConfig(k=15), [0.5, 0.6, 0.7, 0.8, 0.9])
    values = [point.completeness for point in curve.points]
    assert all(b <= a for a, b in zip(values, values[1:]))
    assert curve.method is Method.PROBABILISTIC_PL
    assert curve.grid == (0.5, 0.6, 0.7, 0.8, 0.9)


# --- Cross-validation ---

def test_fold_assignment_is_seeded_and_balanced():
    """Same seed, same folds; fold sizes differ by at most one."""
    first = CrossValidateUseCase.assign_folds(23, 5, rng_seed=9)
    assert first == CrossValidateUseCase.assign_folds(23, 5, rng_seed=9)
    sizes = np.bincount(first, minlength=5)
    assert sizes.max() - sizes.min() <= 1
    assert first != CrossValidateUseCase.assign_folds(23, 5, rng_seed=10)


@pytest.mark.parametrize("folds", [1, 11])
def test_cross_validate_rejects_fold_counts(folds):
    """folds must lie in [2, N]."""
    data = pl_dataset(seed=6, n=10)
    with pytest.raises(FoldError):
        cross_validate(data, folds, Method.PROBABILISTIC_PL, LearnerConfig(k=3), [0.5])


def test_leave_one_out():
    """folds = N gives N per-fold curves, each over one test instance."""
    log.info("--- Test: leave-one-out ---")
    data = pl_dataset(seed=7, n=10)

    # --- Call the Feature API ---
    result = cross_validate(data, 10, Method.PROBABILISTIC_PL, LearnerConfig(k=3), [0.5, 0.8])

    # --- Assert ---
    assert len(result.folds) == 10
    assert sorted(result.assignment) == list(range(10))
    assert result.mean.fold == -1
    assert [curve.fold for curve in result.folds] == list(range(10))
    assert result.mean.points[0].completeness_std is not None


def test_cross_validate_is_deterministic():
    """Same seed twice: identical assignment and curves, for both kinds of method."""
    log.info("--- Test: cross-validation is deterministic ---")
    data = pl_dataset(seed=8, n=30)
    for method in (Method.PROBABILISTIC_PL, Method.BASELINE_ENSEMBLE):
        cfg = LearnerConfig(k=5, ensemble_size=5, rng_seed=4)
        first = cross_validate(data, 3, method, cfg, [0.5, 0.7, 0.9])
        second = cross_validate(data, 3, method, cfg, [0.5, 0.7, 0.9])
        assert first == second
        log.info(f"Test Passed: {method.value} reproduced.")


def test_cross_validate_mean_is_the_pointwise_fold_mean():
    """The fold -1 curve averages the per-fold points."""
    data = pl_dataset(seed=9, n=40)
    result = cross_validate(data, 4, Method.PROBABILISTIC_PL, LearnerConfig(k=5, rng_seed=1), [0.5, 0.75])
    for index, point in enumerate(result.mean.points):
        fold_points = [curve.points[index] for curve in result.folds]
        assert point.completeness == pytest.approx(np.mean([p.completeness for p in fold_points]))
        assert point.n_evaluated == sum(p.n_evaluated for p in fold_points)
        assert point.completeness_std == pytest.approx(np.std([p.completeness for p in fold_points], ddof=1))


def test_shuffled_rows_give_the_same_fold_results():
    """Permuting the rows, and the assignment with them, permutes nothing in the per-fold results."""
    data = pl_dataset(seed=10, n=30)
    cfg = LearnerConfig(k=5, rng_seed=2)
    grid = [0.5, 0.7, 0.9]
    assignment = CrossValidateUseCase.assign_folds(data.N, 3, rng_seed=2)
    permutation = np.random.default_rng(99).permutation(data.N)

    original = cross_validate(data, 3, Method.PROBABILISTIC_PL, cfg, grid, assignment=assignment)
    shuffled = cross_validate(
        data.subset(permutation), 3, Method.PROBABILISTIC_PL, cfg, grid,
        assignment=[assignment[row] for row in permutation],
    )
    for a, b in zip(original.folds, shuffled.folds):
        for pa, pb in zip(a.points, b.points):
            assert pa.completeness == pytest.approx(pb.completeness, abs=1e-9)
            assert pa.n_evaluated == pb.n_evaluated


def test_cross_validate_rejects_a_bad_assignment():
    """An explicit assignment must give every row one of the folds, each used."""
    data = pl_dataset(seed=11, n=6)
    with pytest.raises(FoldError):
        cross_validate(data, 2, Method.PROBABILISTIC_PL, LearnerConfig(k=2), [0.5], assignment=[0, 0, 0, 0, 0, 0])


# --- End to end ---

def test_abstention_trades_completeness_for_correctness_on_synthetic_pl_data():
    """500 pl-linear instances, 5-fold CV: thresholding higher answers less, and better."""
    from main.features.datasets.domain.models import SynthSpec
    from main.features.datasets.service.api import synth
    from main.features.evaluation.config.settings import DEFAULT_Q_GRID

    start = time.perf_counter()
    data = synth(SynthSpec(generator="pl-linear", n=500, m=5, d=4), rng_seed=7)
    cfg = LearnerConfig(rng_seed=7)
    curves = {
        method: cross_validate(data, 5, method, cfg, DEFAULT_Q_GRID).mean
        for method in (Method.PROBABILISTIC_PL, Method.BASELINE_ENSEMBLE)
    }
    elapsed = time.perf_counter() - start

    def at(curve: TradeoffCurve, q: float) -> TradeoffPoint:
        return curve.points[curve.grid.index(q)]

    pl = curves[Method.PROBABILISTIC_PL]
    log.info(f"PL completeness {[round(p.completeness, 3) for p in pl.points]} in {elapsed:.1f}s")
    assert at(pl, 0.9).completeness < at(pl, 0.5).completeness
    for curve in curves.values():
        assert at(curve, 0.9).correctness >= at(curve, 0.5).correctness
    assert elapsed < 300
