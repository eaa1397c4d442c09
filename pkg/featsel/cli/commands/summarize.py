from __future__ import annotations

"""`featsel summarize`: rebuild the report from persisted run files."""

import argparse

from featsel.core.config.settings import settings
from featsel.core.experiment.reporting.tables import render_tables, summarize


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("summarize", help="Aggregate persisted runs into tables.")
    parser.add_argument("--out", default=settings.OUTPUT_DIR, help="Experiment output directory.")
    parser.add_argument(
        "--baseline", action="append", dest="baselines", help="Baseline variant for verdicts (repeatable)."
    )
    parser.add_argument("--alpha", type=float, default=0.05, help="Significance level.")
    parser.add_argument(
        "--pooled", action="store_true", help="Pooled-variance t-test instead of Welch."
    )
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    report = summarize(args.out, baselines=args.baselines, alpha=args.alpha, equal_var=args.pooled)
    print(render_tables(report))
    return 0
