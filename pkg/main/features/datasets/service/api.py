"""
This is the Service Layer - The only Public API for the datasets feature.

Its responsibilities:
1.  Read, validate and write label-ranking dataset files.
2.  Generate seeded synthetic datasets.
3.  Write trade-off curves and per-instance results as CSV or JSON.
4.  Perform Dependency Injection: pick the concrete store, generator or
    writer (from the `data` layer) and inject it into the use cases.
"""

import logging
from pathlib import Path
from typing import Sequence

from ...evaluation.domain.models import InstanceResult, TradeoffCurve
from ...learners.domain.models import Dataset, Method

from ..data.csv_dataset import CsvDatasetStore
from ..data.curve_writers import CsvCurveWriter, JsonCurveWriter
from ..data.synthetic import LinearPLGenerator, MallowsRegionsGenerator

from ..domain.interfaces import ICurveWriter, IDatasetGenerator
from ..domain.models import Generator, OutputFormat, SynthSpec
from ..domain.use_case import IngestDatasetUseCase, SynthesizeDatasetUseCase

from ..config import settings
from ..exceptions.errors import DatasetError

log = logging.getLogger(__name__)
log.setLevel(settings.LOG_LEVEL)
if not log.handlers:
    log.addHandler(logging.StreamHandler())
    log.handlers[0].setLevel(settings.LOG_LEVEL)


def ingest(path: Path | str, label_names: Sequence[str] | None = None) -> Dataset:
    """
    Parses and validates a dataset file.

    Args:
        path: The CSV dataset file.
        label_names: (Optional) The expected label set in index order;
                     any other label in the file is an error.

    Raises:
        DatasetFileNotFoundError: If the file does not exist.
        DatasetFormatError: On the first malformed header, row or cell,
                            naming its row and column.
    """
    # --- Input Processing ---
    path = Path(path)
    log.info(f"Ingesting dataset: {path}")

    # --- Dependency Injection ---
    use_case = IngestDatasetUseCase(store=CsvDatasetStore())

    # --- Execute ---
    try:
        dataset = use_case.execute(path, label_names)
    except DatasetError as e:
        log.error(f"Dataset ingestion failed: {e}")
        raise
    log.info(f"Loaded {dataset.N} instances with {dataset.d} features and {dataset.M} labels.")
    return dataset


def write_dataset(dataset: Dataset, path: Path | str) -> Path:
    """Writes a dataset that `ingest` reads back to an equal Dataset."""
    return CsvDatasetStore().write(dataset, Path(path))


def generator_for(generator: Generator | str) -> IDatasetGenerator:
    generator = Generator(generator)
    if generator is Generator.PL_LINEAR:
        return LinearPLGenerator()
    return MallowsRegionsGenerator()


def synth(spec: SynthSpec, rng_seed: int) -> Dataset:
    """
    Draws a synthetic dataset. Equal (spec, seed) pairs give equal datasets.

    Raises:
        SyntheticSpecError: Raised by SynthSpec on invalid parameters.
    """
    log.info(f"Generating {spec.n} instances with {spec.generator.value} (seed {rng_seed}).")
    # --- Dependency Injection ---
    use_case = SynthesizeDatasetUseCase(generator_for(spec.generator))
    return use_case.execute(spec, rng_seed)


def writer_for(output_format: OutputFormat | str) -> ICurveWriter:
    if OutputFormat(output_format) is OutputFormat.JSON:
        return JsonCurveWriter()
    return CsvCurveWriter()


def write_curves(curves: Sequence[TradeoffCurve], path: Path | str,
                 output_format: OutputFormat | str = OutputFormat.CSV) -> Path:
    """
    One record per (method, fold, q); fold -1 is the cross-fold mean.

    Raises:
        DatasetError: If the file cannot be written.
    """
    path = writer_for(output_format).write(curves, Path(path))
    log.info(f"Wrote {len(curves)} curve(s) to {path}")
    return path


def write_instances(results: Sequence[tuple[Method, Sequence[InstanceResult]]], path: Path | str,
                    output_format: OutputFormat | str = OutputFormat.CSV) -> Path:
    """Per-instance completeness, correctness and effective threshold."""
    path = writer_for(output_format).write_instances(results, Path(path))
    log.info(f"Wrote per-instance results to {path}")
    return path
