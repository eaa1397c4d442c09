from __future__ import annotations

"""Flat key=value experiment files.

    # toy sweep
    dataset=data/toy.csv
    variant=nsga2,diverse_nsga2
    runs=5
    nfc=3000

Keys mirror the CLI flags. Precedence: Settings defaults < file < flags."""

import logging
from pathlib import Path
from typing import Any, Callable, Dict, Mapping, Optional, Tuple

from dotenv import dotenv_values
from pydantic import ValidationError

from featsel.core.experiment.schemas import ExperimentConfig
from featsel.core.utils.errors import ConfigError

logger = logging.getLogger(__name__)


def _as_list(raw: str) -> list[str]:
    return [item.strip() for item in raw.split(",") if item.strip()]


def _as_bool(raw: str) -> bool:
    text = raw.strip().lower()
    if text in {"1", "true", "yes", "on"}:
        return True
    if text in {"0", "false", "no", "off"}:
        return False
    raise ValueError(f"not a boolean: {raw!r}")


# file key -> (ExperimentConfig field, parser)
FLAT_KEYS: Dict[str, Tuple[str, Callable[[str], Any]]] = {
    "dataset": ("datasets", _as_list),
    "variant": ("variants", _as_list),
    "runs": ("runs", int),
    "seed": ("seed_base", int),
    "nfc": ("max_nfc", int),
    "pop": ("population_size", int),
    "out": ("output_dir", str),
    "jobs": ("n_jobs", int),
    "k": ("k", int),
    "test_fraction": ("test_fraction", float),
    "mutation_prob": ("mutation_prob", float),
    "stratify": ("stratify", _as_bool),
    "normalize": ("normalize", _as_bool),
}


def read_config_file(path: str | Path) -> Dict[str, Any]:
    """
    Parse a flat config file into ExperimentConfig field values.

    Raises:
        ConfigError: missing file, unknown key, or a value that does not parse.
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"Config file not found: {path}")

    values: Dict[str, Any] = {}
    for key, raw in dotenv_values(path).items():
        if key not in FLAT_KEYS:
            raise ConfigError(f"{path}: unknown key '{key}'.")
        if raw is None or raw.strip() == "":
            raise ConfigError(f"{path}: key '{key}' has no value.")
        field, parse = FLAT_KEYS[key]
        try:
            values[field] = parse(raw)
        except ValueError as e:
            raise ConfigError(f"{path}: bad value for '{key}': {e}") from e

    logger.debug("Read %d keys from %s", len(values), path)
    return values


def build_experiment_config(
    file_values: Optional[Mapping[str, Any]] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> ExperimentConfig:
    """
    Merge file values and flag overrides (None means "not given") into a validated config.
    """
    merged: Dict[str, Any] = dict(file_values or {})
    merged.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        return ExperimentConfig(**merged)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(p) for p in err['loc']) or 'config'}: {err['msg']}" for err in e.errors()
        )
        raise ConfigError(f"Invalid experiment configuration: {problems}") from e


def load_experiment_config(
    path: Optional[str | Path] = None, **overrides: Any
) -> ExperimentConfig:
    file_values = read_config_file(path) if path is not None else {}
    return build_experiment_config(file_values, overrides)
