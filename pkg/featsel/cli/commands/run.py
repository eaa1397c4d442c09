from __future__ import annotations

"""`featsel run`: execute a sweep, persist every run and print the summary tables."""

import argparse
import logging

from featsel.core.experiment.config_loader import load_experiment_config
from featsel.core.experiment.reporting.curves import emit_all_curves
from featsel.core.experiment.reporting.tables import render_tables
from featsel.core.experiment.runner import run_experiment
from featsel.core.utils.errors import DatasetParseError

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("run", help="Run datasets x variants x seeds and summarize.")
    parser.add_argument("--config", help="Flat key=value experiment file.")
    parser.add_argument(
        "--dataset", action="append", dest="datasets", help="Dataset CSV (repeatable)."
    )
    parser.add_argument(
        "--variant",
        action="append",
        dest="variants",
        help="nsga2, nsga2_genuine, diverse_nsga2 or nsga2_replacement (repeatable; default all).",
    )
    parser.add_argument("--runs", type=int, help="Seeds per variant.")
    parser.add_argument("--seed", type=int, dest="seed_base", help="Seed of run 0.")
    parser.add_argument("--nfc", type=int, dest="max_nfc", help="Function-call budget per run.")
    parser.add_argument("--pop", type=int, dest="population_size", help="Population size.")
    parser.add_argument("--out", dest="output_dir", help="Output directory.")
    parser.add_argument("--jobs", type=int, dest="n_jobs", help="Worker processes (-1 = all cores).")
    parser.add_argument(
        "--baseline", action="append", dest="baselines", help="Baseline variant for verdicts (repeatable)."
    )
    parser.add_argument("--no-curves", action="store_true", help="Skip writing curve CSVs.")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    config = load_experiment_config(
        args.config,
        datasets=args.datasets,
        variants=args.variants,
        runs=args.runs,
        seed_base=args.seed_base,
        max_nfc=args.max_nfc,
        population_size=args.population_size,
        output_dir=args.output_dir,
        n_jobs=args.n_jobs,
    )
    report = run_experiment(config, baselines=args.baselines)
    if not args.no_curves:
        emit_all_curves(config.output_dir)
    print(render_tables(report))

    if report.failures and not report.cells:
        raise DatasetParseError(
            "No dataset could be loaded: " + "; ".join(f"{k}: {v}" for k, v in sorted(report.failures.items()))
        )
    return 0
