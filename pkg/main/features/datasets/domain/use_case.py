from pathlib import Path
from typing import Sequence

import numpy as np

from ...learners.domain.models import Dataset
from .interfaces import IDatasetGenerator, IDatasetStore
from .models import SynthSpec
from ..exceptions.errors import DatasetFileNotFoundError


class IngestDatasetUseCase:
    """
    Validates the input path, then delegates parsing to the injected store.
    """

    def __init__(self, store: IDatasetStore):
        self._store = store

    def execute(self, path: Path, label_names: Sequence[str] | None = None) -> Dataset:
        """
        Raises:
            DatasetFileNotFoundError: If the path is missing or not a file.
            DatasetFormatError: If the file is malformed.
        """
        if not path.exists():
            raise DatasetFileNotFoundError(f"Dataset file not found at: {path}")
        if not path.is_file():
            raise DatasetFileNotFoundError(f"Path is not a file: {path}")
        return self._store.read(path, label_names)


class SynthesizeDatasetUseCase:
    def __init__(self, generator: IDatasetGenerator):
        self._generator = generator

    def execute(self, spec: SynthSpec, rng_seed: int) -> Dataset:
        return self._generator.generate(spec, np.random.default_rng(rng_seed))
