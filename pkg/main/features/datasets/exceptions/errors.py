"""
Custom exceptions for the datasets feature.
"""

class DatasetError(Exception):
    """Base exception for dataset ingestion, generation and output errors."""
    pass

class DatasetFileNotFoundError(DatasetError):
    """Raised when the input dataset file does not exist."""
    pass

class DatasetFormatError(DatasetError, ValueError):
    """
    Raised when a dataset file is malformed. `row` is the 1-based data row
    (0 for the header) and `column` the offending column name, when known.
    """

    def __init__(self, message: str, row: int | None = None, column: str | None = None):
        location = []
        if row is not None:
            location.append("header" if row == 0 else f"row {row}")
        if column is not None:
            location.append(f"column '{column}'")
        super().__init__(f"{', '.join(location)}: {message}" if location else message)
        self.row = row
        self.column = column

class SyntheticSpecError(DatasetError, ValueError):
    """Raised when a synthetic generator specification is invalid."""
    pass
