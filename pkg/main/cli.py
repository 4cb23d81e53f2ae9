"""
Command-line entry point.

    label-abstention ingest  --data FILE (--validate | --out FILE)
    label-abstention synth   --generator pl-linear --n 500 --m 5 --d 4 --seed 0 --out FILE
    label-abstention sweep   --data FILE --method pl --folds 5 --seed 0 --out FILE
    label-abstention compare --data FILE --method pl --folds 5 --seed 0 --out FILE
    label-abstention predict --train FILE --x 0.1,2.3 --q 0.7 --method baseline --seed 0

Curves are written as CSV or JSON; diagnostics go to stderr. The exit
code is 0 only when every output was written.
"""
import argparse
import json
import logging
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .features.abstention.domain.models import Threshold
from .features.abstention.exceptions.errors import AbstentionError, InvalidThresholdError
from .features.abstention.service.api import predict_relation
from .features.datasets.config import settings as dataset_settings
from .features.datasets.data.curve_writers import format_number
from .features.datasets.domain.models import Generator, OutputFormat, SynthSpec
from .features.datasets.exceptions.errors import DatasetError
from .features.datasets.service.api import ingest, synth, write_curves, write_dataset, write_instances
from .features.evaluation.config import settings as evaluation_settings
from .features.evaluation.exceptions.errors import EvaluationError
from .features.evaluation.service.api import cross_validate, sweep_detailed
from .features.learners.config import settings as learner_settings
from .features.learners.domain.models import Dataset, LearnerConfig, Method
from .features.learners.exceptions.errors import LearnerError
from .features.learners.service.api import predict_relations
from .features.ranking_models.exceptions.errors import RankingModelError
from .features.rankings.exceptions.errors import RankingError

log = logging.getLogger(__name__)
log.setLevel(logging.INFO)
if not log.handlers:
    log.addHandler(logging.StreamHandler())
    log.handlers[0].setLevel(logging.INFO)

FEATURE_ERRORS = (RankingError, RankingModelError, AbstentionError, LearnerError, EvaluationError, DatasetError)


class ConfigError(ValueError):
    """Raised when command-line arguments are inconsistent or out of range."""
    pass


def parse_q_grid(text: str) -> tuple[float, ...]:
    """
    "lo:hi:step" (hi included when it lies on the grid) or a single q.
    Every value must satisfy 1/2 <= q < 1.
    """
    parts = text.split(":")
    try:
        numbers = [float(part) for part in parts]
    except ValueError:
        raise ConfigError(f"--q-grid expects lo:hi:step, got '{text}'.") from None
    if len(numbers) == 1:
        values = numbers
    elif len(numbers) == 3:
        lo, hi, step = numbers
        if not all(math.isfinite(v) for v in numbers) or step <= 0 or hi < lo:
            raise ConfigError(f"--q-grid needs lo <= hi and step > 0, got '{text}'.")
        count = int(math.floor((hi - lo) / step + 1e-9)) + 1
        values = np.round(lo + step * np.arange(count), 10).tolist()
    else:
        raise ConfigError(f"--q-grid expects lo:hi:step, got '{text}'.")
    try:
        return tuple(Threshold(q).q for q in values)
    except InvalidThresholdError as e:
        raise ConfigError(f"--q-grid: {e}") from e


def parse_vector(text: str) -> np.ndarray:
    try:
        x = np.array([float(v) for v in text.split(",")], dtype=float)
    except ValueError:
        raise ConfigError(f"--x expects comma-separated numbers, got '{text}'.") from None
    if not np.all(np.isfinite(x)):
        raise ConfigError(f"--x must be finite, got '{text}'.")
    return x


def configure_logging(level: int) -> None:
    """Applies `level` to every logger of the package and to its handlers."""
    names = [name for name in logging.root.manager.loggerDict if name == "main" or name.startswith("main.")]
    for name in names:
        logger = logging.getLogger(name)
        logger.setLevel(level)
        for handler in logger.handlers:
            handler.setLevel(level)


def learner_config(method: Method, k: int, ensemble_size: int, seed: int) -> LearnerConfig:
    """The baseline keeps the default model kind; it never fits one."""
    model_kind = method.model_kind or LearnerConfig().model_kind
    return LearnerConfig(k=k, model_kind=model_kind, ensemble_size=ensemble_size, rng_seed=seed)


@dataclass(frozen=True)
class RunConfig:
    """Everything a sweep or compare run depends on; equal configs give byte-identical files."""
    command: str
    methods: tuple[Method, ...]
    out: Path
    data: Path | None
    train: Path | None
    test: Path | None
    instances: Path | None
    k: int
    ensemble_size: int
    folds: int
    q_grid: tuple[float, ...]
    seed: int
    output_format: OutputFormat

    def __post_init__(self):
        if self.data is not None and (self.train is not None or self.test is not None):
            raise ConfigError("Use either --data or --train/--test, not both.")
        if self.data is None and (self.train is None or self.test is None):
            raise ConfigError("A dataset is required: --data FILE, or --train FILE with --test FILE.")
        if self.data is not None and self.folds < 2:
            raise ConfigError(f"--folds must be at least 2, got {self.folds}.")
        # Fails early on k / ensemble size, before any file is read.
        for method in self.methods:
            learner_config(method, self.k, self.ensemble_size, self.seed)

    @classmethod
    def from_args(cls, args: argparse.Namespace, methods: Sequence[Method]) -> "RunConfig":
        return cls(
            command=args.command,
            methods=tuple(methods),
            out=args.out,
            data=args.data,
            train=args.train,
            test=args.test,
            instances=args.instances,
            k=args.k,
            ensemble_size=args.ensemble_size,
            folds=args.folds,
            q_grid=parse_q_grid(args.q_grid),
            seed=args.seed,
            output_format=OutputFormat(args.format),
        )


def load_data(cfg: RunConfig) -> tuple[Dataset | None, Dataset | None, Dataset | None]:
    """(data, train, test): either --data for cross-validation or --train with --test."""
    if cfg.data is not None:
        return ingest(cfg.data), None, None
    train = ingest(cfg.train)
    test = ingest(cfg.test, label_names=train.label_names)
    if test.feature_names != train.feature_names:
        raise ConfigError(f"Train features {train.feature_names} differ from test features {test.feature_names}.")
    return None, train, test


def run(cfg: RunConfig) -> int:
    """
    Cross-validation (--data) or a train/test sweep for every method of
    `cfg`, on the same folds and seed, into one curve file.
    """
    data, train, test = load_data(cfg)
    curves, instances = [], []
    for method in cfg.methods:
        learner_cfg = learner_config(method, cfg.k, cfg.ensemble_size, cfg.seed)
        if data is not None:
            result = cross_validate(data, cfg.folds, method, learner_cfg, cfg.q_grid)
            curves.extend([result.mean, *result.folds])
        else:
            result = sweep_detailed(train, test, method, learner_cfg, cfg.q_grid)
            curves.append(result.curve)
        instances.append((method, result.instances))

    write_curves(curves, cfg.out, cfg.output_format)
    if cfg.instances is not None:
        write_instances(instances, cfg.instances, cfg.output_format)
    return 0


def cmd_ingest(args: argparse.Namespace) -> int:
    """--validate is a dry run: check and summarise, write nothing. Otherwise --out is rewritten."""
    if args.validate and args.out is not None:
        raise ConfigError("--validate writes nothing; drop it to rewrite the dataset with --out.")
    if not args.validate and args.out is None:
        raise ConfigError("ingest needs --validate (check only) or --out FILE (rewrite).")

    dataset = ingest(args.data)
    if args.validate:
        print(f"OK: {dataset.N} instances, {dataset.d} features, {dataset.M} labels "
              f"({', '.join(dataset.label_names)})")
        return 0
    path = write_dataset(dataset, args.out)
    log.info(f"Rewrote {dataset.N} instances to {path}")
    return 0


def cmd_synth(args: argparse.Namespace) -> int:
    spec = SynthSpec(
        generator=args.generator,
        n=args.n,
        m=args.m,
        d=args.d,
        noise=args.noise,
        theta=args.theta,
        weight_scale=args.weight_scale,
        regions=args.regions,
    )
    path = write_dataset(synth(spec, args.seed), args.out)
    log.info(f"Wrote synthetic dataset to {path}")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    return run(RunConfig.from_args(args, [Method.from_flag(args.method)]))


def cmd_compare(args: argparse.Namespace) -> int:
    probabilistic = Method.from_flag(args.method)
    if not probabilistic.is_probabilistic:
        raise ConfigError("compare runs the baseline itself; --method must be mallows or pl.")
    return run(RunConfig.from_args(args, [probabilistic, Method.BASELINE_ENSEMBLE]))


def cmd_predict(args: argparse.Namespace) -> int:
    method = Method.from_flag(args.method)
    try:
        q = Threshold(args.q)
    except InvalidThresholdError as e:
        raise ConfigError(f"--q: {e}") from e
    train = ingest(args.train)
    x = parse_vector(args.x)
    cfg = learner_config(method, args.k, args.ensemble_size, args.seed)
    relation = predict_relations(train, x[None, :], method, cfg)[0]
    prediction = predict_relation(relation, q, repair=not method.is_probabilistic)

    pairs = [(train.label_names[i], train.label_names[j]) for i, j in prediction.order.asserted_pairs()]
    if args.format == OutputFormat.JSON.value:
        print(json.dumps({
            "method": method.value,
            "pairs": [list(pair) for pair in pairs],
            "requested_q": float(format_number(prediction.requested_q.q)),
            "effective_q": float(format_number(prediction.effective_q.q)),
            "repaired": prediction.repaired,
        }, indent=2))
    else:
        for a, b in pairs:
            print(f"{a}{dataset_settings.RANKING_SEPARATOR}{b}")
        print(f"effective_q={format_number(prediction.effective_q.q)}")
    return 0


def _add_learner_arguments(parser: argparse.ArgumentParser, default_method: str) -> None:
    parser.add_argument("--method", choices=["mallows", "pl", "baseline"], default=default_method,
                        help="Local model for the probabilistic methods, or the ensemble baseline.")
    parser.add_argument("--k", type=int, default=learner_settings.DEFAULT_K, help="Number of neighbors.")
    parser.add_argument("--ensemble-size", type=int, default=learner_settings.DEFAULT_ENSEMBLE_SIZE,
                        help="Bootstrap members of the baseline ensemble.")
    parser.add_argument("--seed", type=int, required=True, help="Seed for folds, bootstrap and sampling.")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value)


def _add_sweep_arguments(parser: argparse.ArgumentParser, default_method: str) -> None:
    _add_learner_arguments(parser, default_method)
    parser.add_argument("--data", type=Path, help="Dataset for cross-validation.")
    parser.add_argument("--train", type=Path, help="Training dataset (with --test).")
    parser.add_argument("--test", type=Path, help="Test dataset (with --train).")
    parser.add_argument("--folds", type=int, default=evaluation_settings.DEFAULT_FOLDS)
    grid = evaluation_settings.DEFAULT_Q_GRID
    parser.add_argument("--q-grid", default=f"{grid[0]}:{grid[-1]}:{round(grid[1] - grid[0], 10)}",
                        help="Thresholds as lo:hi:step, each in [0.5, 1).")
    parser.add_argument("--out", type=Path, required=True, help="Curve output file.")
    parser.add_argument("--instances", type=Path, help="Optional per-instance output file.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="label-abstention",
        description="Label ranking with partial abstention: predict partial orders and trace "
                    "completeness / correctness trade-off curves.",
    )
    parser.add_argument("--verbose", action="store_true", help="Debug logging.")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], default=None)
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("ingest", help="Parse and validate a dataset file.")
    p.add_argument("--data", type=Path, required=True)
    p.add_argument("--validate", action="store_true", help="Check only: print a summary and write nothing.")
    p.add_argument("--out", type=Path, help="Rewrite the dataset in canonical form.")
    p.set_defaults(handler=cmd_ingest)

    p = commands.add_parser("synth", help="Generate a seeded synthetic dataset.")
    p.add_argument("--generator", choices=[g.value for g in Generator], default=Generator.PL_LINEAR.value)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--noise", type=float, default=0.0)
    p.add_argument("--theta", type=float, default=dataset_settings.DEFAULT_SYNTH_THETA,
                   help="Mallows spread (mallows-regions).")
    p.add_argument("--weight-scale", type=float, default=dataset_settings.DEFAULT_SYNTH_WEIGHT_SCALE,
                   help="Scale of the log-linear weights (pl-linear); 0 gives uniform rankings.")
    p.add_argument("--regions", type=int, default=dataset_settings.DEFAULT_SYNTH_REGIONS,
                   help="Number of regions (mallows-regions).")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", type=Path, required=True)
    p.set_defaults(handler=cmd_synth)

    p = commands.add_parser("sweep", help="Trade-off curve of one method.")
    _add_sweep_arguments(p, default_method="pl")
    p.set_defaults(handler=cmd_sweep)

    p = commands.add_parser("compare", help="Probabilistic method and baseline on identical folds.")
    _add_sweep_arguments(p, default_method="pl")
    p.set_defaults(handler=cmd_compare)

    p = commands.add_parser("predict", help="Partial order for a single instance.")
    _add_learner_arguments(p, default_method="pl")
    p.add_argument("--train", type=Path, required=True)
    p.add_argument("--x", required=True, help="Comma-separated feature vector.")
    p.add_argument("--q", type=float, default=evaluation_settings.DEFAULT_Q_GRID[0])
    p.set_defaults(handler=cmd_predict)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        configure_logging(logging.DEBUG)
    elif args.log_level is not None:
        configure_logging(getattr(logging, args.log_level))

    try:
        return args.handler(args)
    except (ConfigError, *FEATURE_ERRORS) as e:
        log.error(f"Error: {e}")
        return 1
    except Exception as e:
        log.error(f"An unexpected error occurred: {e}", exc_info=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())
