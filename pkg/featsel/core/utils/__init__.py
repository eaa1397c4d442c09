"""
Shared utility helpers for featsel.

This package provides:
- Logging configuration and helpers
- The exception hierarchy
- General-purpose helper functions
"""

from featsel.core.utils.loggers import (
    configure_global_logging,
    silence_external_loggers,
    log_debug_payload,
)
from featsel.core.utils.helpers import (
    make_rng,
    flatten_list,
    to_jsonable,
    dumps_record,
    pretty_json,
    ensure_dir,
)
from featsel.core.utils.errors import (
    FeatselError,
    DimensionError,
    InitSpecError,
    SelectionError,
    DatasetParseError,
    DegenerateGenomeError,
    BudgetExhaustedError,
    ReplacementBypass,
    ConfigError,
    StatisticsError,
    RunStoreError,
)

__all__ = [
    # logging
    "configure_global_logging",
    "silence_external_loggers",
    "log_debug_payload",
    # helpers
    "make_rng",
    "flatten_list",
    "to_jsonable",
    "dumps_record",
    "pretty_json",
    "ensure_dir",
    # errors
    "FeatselError",
    "DimensionError",
    "InitSpecError",
    "SelectionError",
    "DatasetParseError",
    "DegenerateGenomeError",
    "BudgetExhaustedError",
    "ReplacementBypass",
    "ConfigError",
    "StatisticsError",
    "RunStoreError",
]
