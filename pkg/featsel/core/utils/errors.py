from __future__ import annotations

"""Exception hierarchy shared by every engine.

Each error carries a category and the exit code the CLI reports for it."""


class FeatselError(ValueError):
    category: str = "error"
    exit_code: int = 1


class DimensionError(FeatselError):
    category = "dimension"
    exit_code = 1


class InitSpecError(FeatselError):
    category = "init-spec"
    exit_code = 2


class SelectionError(FeatselError):
    category = "selection"
    exit_code = 4


class DatasetParseError(FeatselError):
    """Raised when a dataset file violates the CSV contract; carries the offending row."""

    category = "dataset"
    exit_code = 3

    def __init__(self, message: str, row: int | None = None) -> None:
        self.row = row
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)


class DegenerateGenomeError(FeatselError):
    category = "degenerate-genome"
    exit_code = 4


class BudgetExhaustedError(FeatselError):
    category = "budget"
    exit_code = 4


class ReplacementBypass(FeatselError):
    """Signals that the population sits on a single front and nothing is replaced."""

    category = "replacement"
    exit_code = 4


class ConfigError(FeatselError):
    category = "config"
    exit_code = 2


class StatisticsError(FeatselError):
    category = "statistics"
    exit_code = 5


class RunStoreError(FeatselError):
    """Persisted run files are missing or malformed."""

    category = "run-store"
    exit_code = 5
