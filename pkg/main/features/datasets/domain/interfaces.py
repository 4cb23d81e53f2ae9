from abc import ABC, abstractmethod
from pathlib import Path
from typing import Sequence

import numpy as np

from ...evaluation.domain.models import InstanceResult, TradeoffCurve
from ...learners.domain.models import Dataset, Method
from .models import SynthSpec


class IDatasetGenerator(ABC):
    """
    A synthetic label-ranking data source.
    This is the "Port" the synth use case depends on.
    """

    @abstractmethod
    def generate(self, spec: SynthSpec, rng: np.random.Generator) -> Dataset:
        """
        Draws spec.n instances. All randomness comes from `rng`, so equal
        seeds give equal datasets.
        """
        pass


class ICurveWriter(ABC):
    """
    Serializes trade-off curves (one row per method, fold and threshold).
    """

    @property
    @abstractmethod
    def suffix(self) -> str:
        pass

    @abstractmethod
    def write(self, curves: Sequence[TradeoffCurve], path: Path) -> Path:
        """
        Raises:
            DatasetError: If the file cannot be written.
        """
        pass

    @abstractmethod
    def write_instances(self, results: Sequence[tuple[Method, Sequence[InstanceResult]]], path: Path) -> Path:
        """Per-instance results, grouped by the method that produced them."""
        pass


class IDatasetStore(ABC):
    """Reads and writes label-ranking datasets in one file format."""

    @abstractmethod
    def read(self, path: Path, label_names: Sequence[str] | None = None) -> Dataset:
        """
        Args:
            path: An existing dataset file.
            label_names: (Optional) The expected label set, in index order.

        Raises:
            DatasetFormatError: If the file is malformed.
        """
        pass

    @abstractmethod
    def write(self, dataset: Dataset, path: Path) -> Path:
        pass
