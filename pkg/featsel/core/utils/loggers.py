from __future__ import annotations

"""Structured, timestamped logging for the optimizer and the experiment harness.

All logs follow the format:

[2025-01-01 12:30:20] [INFO] [featsel.core.optimizer] Generation 12: hv=0.9312 replaced=9"""

import json
import logging
from typing import Any, Dict


_DEFAULT_LOG_FORMAT = (
    "[%(asctime)s] [%(levelname)s] [%(name)s] %(message)s"
)
_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def configure_global_logging(level: int | str = logging.INFO) -> None:
    """
    Configure the root logger with a consistent format.

    Should typically be called once at CLI startup. Accepts either a numeric
    level or a level name such as "DEBUG".
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.INFO

    logging.basicConfig(
        level=level,
        format=_DEFAULT_LOG_FORMAT,
        datefmt=_DATE_FORMAT,
        force=True,
    )


def silence_external_loggers() -> None:
    """
    Reduce noise from verbose third-party libraries used by the harness.
    """
    noisy_loggers = [
        "joblib",
        "loky",
        "numexpr",
    ]
    for name in noisy_loggers:
        logging.getLogger(name).setLevel(logging.WARNING)


def log_debug_payload(
    logger: logging.Logger,
    title: str,
    payload: Dict[str, Any],
    level: int = logging.DEBUG,
) -> None:
    """
    Helper to log a JSON payload in a readable way.

    Example log:
        ▶ GENERATION 4
        {
          "hv_train": 0.81,
          "replaced_count": 11
        }
    """
    if not logger.isEnabledFor(level):
        return

    try:
        pretty = json.dumps(payload, indent=2, ensure_ascii=False)
    except TypeError:
        # Fallback: non-serializable objects
        pretty = str(payload)

    logger.log(level, f"▶ {title}\n{pretty}")
