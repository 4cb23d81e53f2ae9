# File: test/features/ranking_models/test_ranking_models_api.py
import logging
import math

import numpy as np
import pytest

from main.features.ranking_models.service.api import (
    build_preference_relation,
    distribution_for,
    enumerated_pairwise_marginal,
    log_likelihood,
    mallows_expected_distance,
    mallows_log_normalizer,
    mallows_log_pdf,
    mode_ranking,
    pairwise_marginal,
    pl_log_pdf,
)
from main.features.ranking_models.domain.models import MallowsModel, PLModel
from main.features.ranking_models.exceptions.errors import InvalidModelError, InvalidPairError
from main.features.rankings.domain.models import Ranking
from main.features.rankings.exceptions.errors import DimensionMismatchError, EnumerationCapError
from main.features.rankings.service.api import enumerate_rankings, kendall_distance

log = logging.getLogger(__name__)


def all_orders(m: int) -> np.ndarray:
    return np.array([r.order for r in enumerate_rankings(m)], dtype=np.int64)


def random_mallows(rng: np.random.Generator, m: int, theta_high: float = 10.0) -> MallowsModel:
    return MallowsModel(Ranking(tuple(rng.permutation(m))), float(rng.uniform(0.0, theta_high)))


def random_pl(rng: np.random.Generator, m: int) -> PLModel:
    return PLModel(tuple(rng.lognormal(0.0, 1.0, size=m)))


# --- Model records ---

def test_model_records_validate_parameters():
    """Negative or capped-out theta and non-positive weights are rejected; PL weights are normalised."""
    with pytest.raises(InvalidModelError):
        MallowsModel(Ranking((0, 1)), -0.1)
    with pytest.raises(InvalidModelError):
        MallowsModel(Ranking((0, 1)), 25.0)
    with pytest.raises(InvalidModelError):
        PLModel((1.0, 0.0))
    assert PLModel((2.0, 1.0, 1.0)).weights == pytest.approx((0.5, 0.25, 0.25))


# --- Normalizer and densities ---

def test_mallows_log_normalizer_examples():
    """Uniform case, a two-ranking enumeration, and the single-label case."""
    assert mallows_log_normalizer(0.0, 3) == pytest.approx(math.log(6))
    assert mallows_log_normalizer(math.log(2), 2) == pytest.approx(math.log(1.5))
    assert mallows_log_normalizer(3.7, 1) == 0.0


def test_mallows_log_pdf_examples():
    """Uniform at theta=0, -ln phi at the center, and the M=2 enumeration."""
    uniform = MallowsModel(Ranking((0, 1, 2)), 0.0)
    for pi in enumerate_rankings(3):
        assert mallows_log_pdf(uniform, pi) == pytest.approx(math.log(1 / 6))

    model = MallowsModel(Ranking((2, 0, 1)), 1.3)
    assert mallows_log_pdf(model, model.center) == pytest.approx(-mallows_log_normalizer(1.3, 3))

    two = MallowsModel(Ranking((0, 1)), math.log(2))
    assert mallows_log_pdf(two, Ranking((0, 1))) == pytest.approx(math.log(2 / 3))
    assert mallows_log_pdf(two, Ranking((1, 0))) == pytest.approx(math.log(1 / 3))


def test_log_pdf_dimension_mismatch():
    """A ranking over the wrong number of labels is rejected."""
    with pytest.raises(DimensionMismatchError):
        mallows_log_pdf(MallowsModel(Ranking((0, 1, 2)), 1.0), Ranking((0, 1)))
    with pytest.raises(DimensionMismatchError):
        pl_log_pdf(PLModel((1.0, 1.0, 1.0)), Ranking((0, 1)))


def test_pl_log_pdf_examples():
    """Uniform weights, one nontrivial factor, and the (2,1,1) stagewise product."""
    uniform = PLModel((1.0, 1.0, 1.0))
    for pi in enumerate_rankings(3):
        assert pl_log_pdf(uniform, pi) == pytest.approx(math.log(1 / 6))
    assert pl_log_pdf(PLModel((2.0, 1.0)), Ranking((0, 1))) == pytest.approx(math.log(2 / 3))
    assert pl_log_pdf(PLModel((2.0, 1.0, 1.0)), Ranking((0, 1, 2))) == pytest.approx(math.log(1 / 4))


def test_densities_normalize_over_all_rankings():
    """sum_pi exp(log_pdf(pi)) = 1 for both models, M <= 6, random parameters."""
    log.info("--- Test: densities sum to one ---")
    rng = np.random.default_rng(3)
    for _ in range(100):
        m = int(rng.integers(1, 7))
        orders = all_orders(m)
        for model in (random_mallows(rng, m), random_pl(rng, m)):
            total = float(np.sum(np.exp(distribution_for(model).log_pdf_batch(orders))))
            assert total == pytest.approx(1.0, abs=1e-9)


def test_log_likelihood_sums_log_pdfs():
    """The sample log-likelihood is the sum of the per-ranking log-densities."""
    model = PLModel((3.0, 2.0, 1.0))
    rankings = [Ranking((0, 1, 2)), Ranking((2, 1, 0)), Ranking((1, 0, 2))]
    assert log_likelihood(model, rankings) == pytest.approx(sum(pl_log_pdf(model, r) for r in rankings))


def test_mallows_expected_distance_matches_enumeration():
    """E_theta[D] equals the enumerated mean distance, including near theta = 0."""
    for m in (2, 3, 5):
        center = Ranking.identity(m)
        for theta in (0.0, 1e-8, 0.3, 1.0, 4.0):
            model = MallowsModel(center, theta)
            expected = sum(
                math.exp(mallows_log_pdf(model, pi)) * kendall_distance(pi, center)
                for pi in enumerate_rankings(m)
            )
            assert mallows_expected_distance(theta, m) == pytest.approx(expected, abs=1e-9)
        log.info(f"Expected distance matches enumeration for M={m}")
    assert mallows_expected_distance(0.0, 5) == pytest.approx(5 * 4 / 4)


def test_mode_ranking():
    """Mallows: the center. PL: decreasing weight, ties by label index."""
    assert mode_ranking(MallowsModel(Ranking((2, 0, 1)), 2.0)) == Ranking((2, 0, 1))
    assert mode_ranking(PLModel((1.0, 3.0, 1.0))) == Ranking((1, 0, 2))


# --- Pairwise marginals ---

def test_pairwise_marginal_examples():
    """Uniform Mallows, the Bradley-Terry ratio, and a peaked Mallows."""
    uniform = MallowsModel(Ranking((1, 0, 2)), 0.0)
    for i in range(3):
        for j in range(3):
            if i != j:
                assert pairwise_marginal(uniform, i, j) == 0.5

    assert pairwise_marginal(PLModel((2.0, 1.0, 1.0)), 0, 1) == pytest.approx(2 / 3)
    assert enumerated_pairwise_marginal(PLModel((2.0, 1.0, 1.0)), 0, 1) == pytest.approx(2 / 3)
    assert pairwise_marginal(MallowsModel(Ranking((0, 1, 2)), 5.0), 0, 1) > 0.99


def test_pairwise_marginal_rejects_equal_labels():
    """i == j has no marginal."""
    with pytest.raises(InvalidPairError):
        pairwise_marginal(PLModel((1.0, 2.0)), 1, 1)
    with pytest.raises(InvalidPairError):
        pairwise_marginal(MallowsModel(Ranking((0, 1)), 1.0), 0, 0)


def test_mallows_marginal_rejects_m_above_enumeration_cap():
    """Mallows marginals are computed by enumeration, whatever the spread."""
    log.info("--- Enumeration cap for Mallows marginals ---")
    for theta in (0.0, 1.0):
        model = MallowsModel(Ranking.identity(10), theta)
        with pytest.raises(EnumerationCapError):
            pairwise_marginal(model, 0, 1)
        with pytest.raises(EnumerationCapError):
            build_preference_relation(model)
    log.info("Passed: M=10 is rejected at theta 0 and theta 1.")


def test_closed_form_marginals_match_enumeration():
    """PL within 1e-10 and gap-cached Mallows within 1e-12 of the linear-extension sum."""
    log.info("--- Test: closed-form marginals against enumeration ---")
    rng = np.random.default_rng(5)
    for _ in range(200):
        m = int(rng.integers(2, 7))
        for model, tolerance in ((random_pl(rng, m), 1e-10), (random_mallows(rng, m), 1e-12)):
            relation = build_preference_relation(model)
            for i in range(m):
                for j in range(m):
                    if i == j:
                        continue
                    oracle = enumerated_pairwise_marginal(model, i, j)
                    assert abs(pairwise_marginal(model, i, j) - oracle) <= tolerance
                    assert abs(relation[i, j] - oracle) <= tolerance
    log.info("Test Passed: 200 random models agree with the enumerated marginals.")


def test_build_preference_relation_examples():
    """Uniform Mallows is all 0.5; PL (4,2,1) gives the Bradley-Terry ratios; P + P^T = 1."""
    uniform = build_preference_relation(MallowsModel(Ranking((0, 1, 2)), 0.0))
    assert np.allclose(uniform.off_diagonal_values(), 0.5)

    relation = build_preference_relation(PLModel((4.0, 2.0, 1.0)))
    assert relation[0, 1] == pytest.approx(2 / 3)
    assert relation[0, 2] == pytest.approx(4 / 5)
    assert relation[1, 2] == pytest.approx(2 / 3)

    rng = np.random.default_rng(9)
    for model in (random_pl(rng, 5), random_mallows(rng, 5)):
        matrix = build_preference_relation(model).matrix
        off = ~np.eye(5, dtype=bool)
        assert np.allclose((matrix + matrix.T)[off], 1.0, atol=1e-12)


def test_mallows_marginal_follows_the_center_and_the_gap():
    """P(i > j) > 0.5 when the center puts i first and theta > 0, growing with the positional gap."""
    log.info("--- Mallows marginals along the center ---")
    rng = np.random.default_rng(13)
    for _ in range(50):
        m = int(rng.integers(3, 7))
        model = MallowsModel(Ranking(tuple(rng.permutation(m))), float(rng.uniform(0.1, 10.0)))
        center = model.center.order
        for a in range(m):
            previous = 0.5
            for b in range(a + 1, m):
                p = enumerated_pairwise_marginal(model, center[a], center[b])
                assert p > 0.5
                assert pairwise_marginal(model, center[a], center[b]) > 0.5
                assert p >= previous - 1e-12
                previous = p
    log.info("Passed: every center-ordered pair is strictly preferred.")
