from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from featsel.cli.commands import convert, curves, run, summarize, toy
from featsel.core.config.settings import settings
from featsel.core.utils.errors import ConfigError, FeatselError
from featsel.core.utils.loggers import configure_global_logging, silence_external_loggers

logger = logging.getLogger("featsel")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="featsel",
        description="Multi-objective wrapper feature selection with diverse NSGA-II.",
    )
    parser.add_argument(
        "--log-level",
        default=settings.LOG_LEVEL,
        help="DEBUG, INFO, WARNING or ERROR (default from FEATSEL_LOG_LEVEL).",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    # Register subcommands
    for command in (run, summarize, curves, convert, toy):
        command.register(subparsers)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    CLI entry point.

    Returns:
        0 on success, otherwise the exit code of the error category
        (2 config, 3 dataset, 4 optimizer, 5 statistics/report, 1 other).
    """
    args = build_parser().parse_args(argv)
    configure_global_logging(args.log_level)
    silence_external_loggers()

    try:
        return args.handler(args)
    except FeatselError as e:
        logger.error("%s error: %s", e.category, e)
        return e.exit_code
    except ValidationError as e:
        logger.error("config error: %s", e)
        return ConfigError.exit_code


if __name__ == "__main__":
    sys.exit(main())
