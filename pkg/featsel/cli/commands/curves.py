from __future__ import annotations

"""`featsel curves`: write long-format curve CSVs for plotting."""

import argparse

from featsel.core.config.constants import CURVE_KINDS
from featsel.core.config.settings import settings
from featsel.core.experiment.reporting.curves import emit_all_curves


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("curves", help="Emit hv / hamming / replaced_ratio curves.")
    parser.add_argument("--out", default=settings.OUTPUT_DIR, help="Experiment output directory.")
    parser.add_argument(
        "--kind", action="append", dest="kinds", choices=CURVE_KINDS, help="Curve kind (repeatable; default all)."
    )
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    for path in emit_all_curves(args.out, kinds=args.kinds):
        print(path)
    return 0
