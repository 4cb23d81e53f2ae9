import csv
import json
from pathlib import Path
from typing import Sequence

from ...evaluation.domain.models import InstanceResult, TradeoffCurve
from ...learners.domain.models import Method
from ..config import settings
from ..domain.interfaces import ICurveWriter
from ..exceptions.errors import DatasetError


def format_number(value: float) -> str:
    return f"{value:.{settings.SIGNIFICANT_DIGITS}g}"


def rounded(value: float | None) -> float | None:
    return None if value is None else float(format_number(value))


def curve_rows(curves: Sequence[TradeoffCurve]) -> list[dict]:
    """One record per (curve, threshold), values rounded to the output precision."""
    return [
        {
            "method": curve.method.value,
            "fold": curve.fold,
            "q": rounded(point.q.q),
            "completeness": rounded(point.completeness),
            "correctness": rounded(point.correctness),
            "n_evaluated": point.n_evaluated,
        }
        for curve in curves
        for point in curve.points
    ]


def instance_rows(results: Sequence[tuple[Method, Sequence[InstanceResult]]]) -> list[dict]:
    return [
        {
            "method": Method(method).value,
            "fold": result.fold,
            "instance": result.instance,
            "q": rounded(result.q),
            "completeness": rounded(result.completeness),
            "correctness": rounded(result.correctness),
            "effective_q": rounded(result.effective_q),
            "repaired": result.repaired,
        }
        for method, instances in results
        for result in instances
    ]


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_number(value)
    return str(value)


class CsvCurveWriter(ICurveWriter):
    """Header row, then one row per record; a missing correctness is an empty cell."""

    @property
    def suffix(self) -> str:
        return ".csv"

    def _write(self, columns: Sequence[str], rows: list[dict], path: Path) -> Path:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", newline="", encoding=settings.ENCODING) as f:
                writer = csv.writer(f, lineterminator="\n")
                writer.writerow(columns)
                for row in rows:
                    writer.writerow([_cell(row[column]) for column in columns])
        except OSError as e:
            raise DatasetError(f"Cannot write {path}: {e}") from e
        return path

    def write(self, curves: Sequence[TradeoffCurve], path: Path) -> Path:
        return self._write(settings.CURVE_COLUMNS, curve_rows(curves), path)

    def write_instances(self, results: Sequence[tuple[Method, Sequence[InstanceResult]]], path: Path) -> Path:
        return self._write(settings.INSTANCE_COLUMNS, instance_rows(results), path)


class JsonCurveWriter(ICurveWriter):
    """A JSON array of records with the CSV column names as keys; null for a missing correctness."""

    @property
    def suffix(self) -> str:
        return ".json"

    def _write(self, rows: list[dict], path: Path) -> Path:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding=settings.ENCODING) as f:
                json.dump(rows, f, indent=2)
                f.write("\n")
        except OSError as e:
            raise DatasetError(f"Cannot write {path}: {e}") from e
        return path

    def write(self, curves: Sequence[TradeoffCurve], path: Path) -> Path:
        return self._write(curve_rows(curves), path)

    def write_instances(self, results: Sequence[tuple[Method, Sequence[InstanceResult]]], path: Path) -> Path:
        return self._write(instance_rows(results), path)
