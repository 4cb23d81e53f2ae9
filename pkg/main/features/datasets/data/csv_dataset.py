"""
Label-ranking dataset files: UTF-8 CSV with a header row, feature columns
named "f:<name>" first, and a final "ranking" column holding '>'-separated
label names, e.g.

    f:x1,f:x2,ranking
    0.1,2.3,L2>L1>L3

The label set is the set of names seen in the ranking column, indexed in
natural order (L2 before L10).
"""
import csv
import logging
import math
import re
from pathlib import Path
from typing import Sequence

from ...learners.domain.models import Dataset
from ...learners.exceptions.errors import InvalidDatasetError
from ...rankings.domain.models import Ranking
from ..config import settings
from ..domain.interfaces import IDatasetStore
from ..exceptions.errors import DatasetFormatError

log = logging.getLogger(__name__)
log.setLevel(settings.LOG_LEVEL)
if not log.handlers:
    log.addHandler(logging.StreamHandler())
    log.handlers[0].setLevel(settings.LOG_LEVEL)


def natural_key(name: str) -> list:
    return [int(part) if part.isdigit() else part for part in re.split(r"(\d+)", name)]


def _parse_header(header: list[str]) -> list[str]:
    if not header or header[-1].strip() != settings.RANKING_COLUMN:
        raise DatasetFormatError(f"the last column must be '{settings.RANKING_COLUMN}'", row=0)
    feature_columns = [column.strip() for column in header[:-1]]
    if not feature_columns:
        raise DatasetFormatError("at least one feature column is required", row=0)
    names = []
    for column in feature_columns:
        if not column.startswith(settings.FEATURE_PREFIX) or len(column) == len(settings.FEATURE_PREFIX):
            raise DatasetFormatError(
                f"feature columns must be named '{settings.FEATURE_PREFIX}<name>'", row=0, column=column
            )
        names.append(column[len(settings.FEATURE_PREFIX):])
    if len(set(names)) != len(names):
        raise DatasetFormatError("duplicate feature column", row=0)
    return names


def _parse_feature(cell: str, row: int, column: str) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise DatasetFormatError(f"non-numeric feature value '{cell}'", row=row, column=column) from None
    if not math.isfinite(value):
        raise DatasetFormatError(f"non-finite feature value '{cell}'", row=row, column=column)
    return value


def read_dataset(path: Path, label_names: list[str] | None = None) -> Dataset:
    """
    Parses and validates a dataset file.

    Args:
        path: The CSV file.
        label_names: (Optional) The expected label set, in index order.
                     If None, it is taken from the ranking column.

    Raises:
        DatasetFormatError: Naming the row and column of the first violation.
    """
    with open(path, newline="", encoding=settings.ENCODING) as f:
        rows = [row for row in csv.reader(f) if any(cell.strip() for cell in row)]
    if not rows:
        raise DatasetFormatError("the file is empty", row=0)

    feature_names = _parse_header(rows[0])
    width = len(feature_names) + 1
    ranking_column = settings.RANKING_COLUMN

    features, orders = [], []
    for row_number, row in enumerate(rows[1:], start=1):
        if len(row) != width:
            raise DatasetFormatError(f"expected {width} cells, found {len(row)}", row=row_number)
        features.append([
            _parse_feature(cell.strip(), row_number, settings.FEATURE_PREFIX + name)
            for cell, name in zip(row[:-1], feature_names)
        ])
        order = [label.strip() for label in row[-1].split(settings.RANKING_SEPARATOR)]
        if any(label == "" for label in order):
            raise DatasetFormatError(f"empty label in ranking '{row[-1]}'", row=row_number, column=ranking_column)
        seen = set()
        for label in order:
            if label in seen:
                raise DatasetFormatError(f"duplicate label '{label}' in ranking", row=row_number, column=ranking_column)
            seen.add(label)
        orders.append(order)
    if not orders:
        raise DatasetFormatError("the file has a header but no data rows", row=0)

    if label_names is None:
        label_names = sorted({label for order in orders for label in order}, key=natural_key)
    index = {name: i for i, name in enumerate(label_names)}

    rankings = []
    for row_number, order in enumerate(orders, start=1):
        unknown = [label for label in order if label not in index]
        if unknown:
            raise DatasetFormatError(f"unknown label '{unknown[0]}'", row=row_number, column=ranking_column)
        if len(order) != len(label_names):
            missing = [name for name in label_names if name not in order]
            raise DatasetFormatError(
                f"incomplete ranking: {len(order)} of {len(label_names)} labels, missing {missing}",
                row=row_number, column=ranking_column,
            )
        rankings.append(Ranking(tuple(index[label] for label in order)))

    try:
        dataset = Dataset(
            features=features,
            rankings=tuple(rankings),
            label_names=tuple(label_names),
            feature_names=tuple(feature_names),
        )
    except InvalidDatasetError as e:
        raise DatasetFormatError(str(e)) from e
    log.debug(f"Read {dataset.N} instances, {dataset.d} features, {dataset.M} labels from {path}")
    return dataset


def write_dataset(dataset: Dataset, path: Path) -> Path:
    """Writes `dataset` in the format `read_dataset` parses; floats are written round-trip exact."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding=settings.ENCODING) as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow([settings.FEATURE_PREFIX + name for name in dataset.feature_names] + [settings.RANKING_COLUMN])
        for x, ranking in zip(dataset.features, dataset.rankings):
            writer.writerow(
                [repr(float(v)) for v in x]
                + [settings.RANKING_SEPARATOR.join(dataset.ranking_to_names(ranking))]
            )
    return path


class CsvDatasetStore(IDatasetStore):
    def read(self, path: Path, label_names: Sequence[str] | None = None) -> Dataset:
        return read_dataset(path, None if label_names is None else list(label_names))

    def write(self, dataset: Dataset, path: Path) -> Path:
        return write_dataset(dataset, path)
