# File: test/test_cli.py
import csv
import json
import logging
import re

import pytest

from main.cli import ConfigError, learner_config, main, parse_q_grid
from main.features.learners.domain.models import LearnerConfig, Method, ModelKind

log = logging.getLogger(__name__)


@pytest.fixture
def dataset_file(tmp_path):
    path = tmp_path / "synthetic.csv"
    code = main(["synth", "--generator", "pl-linear", "--n", "60", "--m", "4", "--d", "2",
                 "--seed", "3", "--out", str(path)])
    assert code == 0
    return path


def read_rows(path):
    with open(path, newline="", encoding="utf-8") as f:
        return list(csv.DictReader(f))


# --- Argument parsing ---

def test_parse_q_grid():
    """lo:hi:step includes hi when it lies on the grid; a single value is a one-point grid."""
    assert parse_q_grid("0.5:0.95:0.05") == (0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95)
    assert parse_q_grid("0.5:0.8:0.2") == (0.5, 0.7)
    assert parse_q_grid("0.7") == (0.7,)
    for bad in ("0.5:1.0:0.1", "0.4:0.6:0.1", "a:b:c", "0.5:0.9", "0.5:0.9:0"):
        with pytest.raises(ConfigError):
            parse_q_grid(bad)


# --- ingest / synth ---

def test_ingest_validate_prints_a_summary(dataset_file, capsys):
    """--validate reports the sizes and label names."""
    log.info("--- ingest --validate ---")
    assert main(["ingest", "--data", str(dataset_file), "--validate"]) == 0
    assert capsys.readouterr().out.strip() == "OK: 60 instances, 2 features, 4 labels (L1, L2, L3, L4)"
    log.info("Passed: summary printed.")


def test_ingest_validate_writes_nothing(dataset_file, tmp_path):
    """--validate is a dry run: combined with --out it is refused and no file appears."""
    out = tmp_path / "clean.csv"
    assert main(["ingest", "--data", str(dataset_file), "--validate", "--out", str(out)]) == 1
    assert not out.exists()
    assert main(["ingest", "--data", str(dataset_file)]) == 1


def test_ingest_out_rewrites_the_dataset(dataset_file, tmp_path):
    """Without --validate, --out writes the canonical form of the file."""
    out = tmp_path / "clean.csv"
    assert main(["ingest", "--data", str(dataset_file), "--out", str(out)]) == 0
    assert out.read_bytes() == dataset_file.read_bytes()


def test_ingest_rejects_a_malformed_file(tmp_path):
    """A format error exits with 1."""
    path = tmp_path / "bad.csv"
    path.write_text("f:x,ranking\n0.1,L1>L1\n", encoding="utf-8")
    assert main(["ingest", "--data", str(path), "--validate"]) == 1


def test_synth_is_reproducible(dataset_file, tmp_path):
    """Same arguments, byte-identical file."""
    again = tmp_path / "again.csv"
    main(["synth", "--generator", "pl-linear", "--n", "60", "--m", "4", "--d", "2",
          "--seed", "3", "--out", str(again)])
    assert again.read_bytes() == dataset_file.read_bytes()


# --- sweep / compare ---

def test_sweep_writes_mean_and_fold_curves(dataset_file, tmp_path):
    """One mean curve (fold -1) plus one curve per fold, with per-instance output."""
    out, instances = tmp_path / "curve.csv", tmp_path / "instances.csv"
    code = main(["sweep", "--data", str(dataset_file), "--method", "mallows", "--k", "5", "--folds", "3",
                 "--q-grid", "0.5:0.9:0.2", "--seed", "1", "--out", str(out), "--instances", str(instances)])
    assert code == 0
    rows = read_rows(out)
    assert {row["method"] for row in rows} == {"probabilistic-mallows"}
    assert sorted({row["fold"] for row in rows}) == ["-1", "0", "1", "2"]
    assert len(rows) == 4 * 3
    # 60 instances, each at 3 thresholds
    assert len(read_rows(instances)) == 60 * 3


def test_compare_is_byte_identical_across_runs(dataset_file, tmp_path):
    """Both methods in one file, on identical folds; rerunning reproduces the file exactly."""
    log.info("--- Test: compare reruns byte for byte ---")
    outputs = []
    for name in ("first.csv", "second.csv"):
        out = tmp_path / name
        code = main(["compare", "--data", str(dataset_file), "--method", "pl", "--k", "5", "--folds", "3",
                     "--ensemble-size", "5", "--q-grid", "0.5:0.9:0.1", "--seed", "42", "--out", str(out)])
        assert code == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
    methods = {row["method"] for row in read_rows(tmp_path / "first.csv")}
    assert methods == {"probabilistic-pl", "baseline-ensemble"}
    log.info("Test Passed: both methods written, identical reruns.")


def test_compare_rejects_the_baseline_as_method(dataset_file, tmp_path):
    """compare adds the baseline itself."""
    code = main(["compare", "--data", str(dataset_file), "--method", "baseline", "--seed", "0",
                 "--out", str(tmp_path / "out.csv")])
    assert code == 1


def test_train_test_sweep_in_json(dataset_file, tmp_path):
    """--train/--test gives one curve, written as JSON records."""
    out = tmp_path / "curve.json"
    code = main(["sweep", "--train", str(dataset_file), "--test", str(dataset_file), "--method", "baseline",
                 "--k", "5", "--ensemble-size", "3", "--q-grid", "0.5:0.7:0.1", "--seed", "0",
                 "--format", "json", "--out", str(out)])
    assert code == 0
    records = json.loads(out.read_text(encoding="utf-8"))
    assert [record["q"] for record in records] == [0.5, 0.6, 0.7]
    assert all(record["fold"] == -1 for record in records)


@pytest.mark.parametrize("extra", [
    ["--q-grid", "0.5:1.0:0.1"],
    ["--folds", "1"],
    ["--k", "0"],
    ["--folds", "61"],
])
def test_sweep_rejects_bad_arguments(dataset_file, tmp_path, extra):
    """A grid reaching 1.0, too few or too many folds, and k = 0 exit with 1 and write nothing."""
    out = tmp_path / "curve.csv"
    code = main(["sweep", "--data", str(dataset_file), "--seed", "0", "--out", str(out), *extra])
    assert code == 1
    assert not out.exists()


def test_sweep_needs_exactly_one_data_source(dataset_file, tmp_path):
    """--data and --train/--test are exclusive; --train needs --test."""
    out = str(tmp_path / "curve.csv")
    assert main(["sweep", "--data", str(dataset_file), "--train", str(dataset_file), "--seed", "0",
                 "--out", out]) == 1
    assert main(["sweep", "--train", str(dataset_file), "--seed", "0", "--out", out]) == 1


# --- predict ---

def test_predict_prints_pairs_and_the_effective_threshold(dataset_file, capsys):
    """One "La>Lb" line per asserted pair, then the threshold actually used."""
    code = main(["predict", "--train", str(dataset_file), "--x", "0.1,-0.4", "--q", "0.6",
                 "--method", "baseline", "--k", "5", "--seed", "0"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    log.info(f"Predicted: {lines}")
    assert re.fullmatch(r"effective_q=0\.\d+", lines[-1])
    assert float(lines[-1].split("=")[1]) >= 0.6
    assert all(re.fullmatch(r"L[1-4]>L[1-4]", line) for line in lines[:-1])


def test_predict_json(dataset_file, capsys):
    """JSON output carries the pairs, both thresholds and the repair flag."""
    code = main(["predict", "--train", str(dataset_file), "--x", "0,0", "--method", "pl", "--k", "10",
                 "--seed", "0", "--format", "json"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["method"] == "probabilistic-pl"
    assert payload["requested_q"] == 0.5
    assert payload["effective_q"] == 0.5
    assert payload["repaired"] is False
    assert all(len(pair) == 2 for pair in payload["pairs"])


def test_predict_rejects_a_wrong_feature_count(dataset_file):
    """The training data has two features."""
    assert main(["predict", "--train", str(dataset_file), "--x", "1,2,3", "--seed", "0"]) == 1


def test_learner_config_keeps_the_default_model_for_the_baseline():
    """The probabilistic methods pick their own model kind; the baseline keeps the default."""
    cfg = learner_config(Method.PROBABILISTIC_MALLOWS, k=7, ensemble_size=3, seed=5)
    assert cfg == LearnerConfig(k=7, model_kind=ModelKind.MALLOWS, ensemble_size=3, rng_seed=5)
    assert learner_config(Method.BASELINE_ENSEMBLE, k=7, ensemble_size=3, seed=5).model_kind is \
        LearnerConfig().model_kind
