from __future__ import annotations

"""Report aggregation and the four summary tables.

persisted runs -> per-run FrontSummary + replaced ratio
              -> (dataset, variant) cells: means, 95% CIs, verdicts vs each baseline
              -> report.json, hv.csv, accuracy.csv, features.csv, replaced.csv

The report is a pure function of the run files: re-summarizing reproduces it byte for byte."""

import logging
from collections import defaultdict
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np
import pandas as pd
from pydantic import BaseModel

from featsel.core.config.constants import REPORT_DIRNAME
from featsel.core.experiment.schemas import CellReport, ExperimentReport, WinTieLoss
from featsel.core.experiment.storage.run_store import (
    StoredRun,
    discover_runs,
    load_failures,
    load_run,
)
from featsel.core.metrics.accuracy import FrontSummary, summarize_front
from featsel.core.metrics.statistics import StatReport, Verdict, count_wtl, stat_report, welch_t_test
from featsel.core.optimizer.schemas import Variant
from featsel.core.utils.errors import ConfigError, RunStoreError, StatisticsError
from featsel.core.utils.helpers import ensure_dir, flatten_list, pretty_json

logger = logging.getLogger(__name__)

NA = "n/a"

# metric -> higher is better
VERDICT_METRICS: Dict[str, bool] = {
    "hv_train": True,
    "hv_test": True,
    "max_accuracy": True,
    "features_at_max_acc": False,
}

DEFAULT_BASELINES = [Variant.NSGA2, Variant.NSGA2_GENUINE]


class RunSummary(BaseModel):
    dataset: str
    variant: Variant
    seed: int
    front: FrontSummary
    replaced_ratio: float


def summarize_run(stored: StoredRun) -> RunSummary:
    """
    Front statistics of one stored run and its mean replaced ratio
    (replaced_count / N averaged over generations >= 1).
    """
    meta = stored.meta
    train = np.array([(m.train_error, m.train_ratio) for m in stored.front], dtype=float)
    test = np.array([(m.test_error, m.test_ratio) for m in stored.front], dtype=float)
    counts = [m.popcount for m in stored.front]
    front = summarize_front(train, test, counts, meta.dimension)

    evolved = [h for h in stored.history if h.generation >= 1]
    ratio = (
        float(np.mean([h.replaced_count / meta.population_size for h in evolved]))
        if evolved
        else 0.0
    )
    return RunSummary(
        dataset=meta.dataset, variant=meta.variant, seed=meta.seed, front=front, replaced_ratio=ratio
    )


def _metric_samples(runs: Sequence[RunSummary], metric: str) -> List[float]:
    return [float(getattr(r.front, metric)) for r in runs]


def _build_cell(
    dataset: str,
    variant: Variant,
    runs: Sequence[RunSummary],
    baseline_runs: Dict[Variant, Sequence[RunSummary]],
    alpha: float,
    equal_var: bool,
) -> CellReport:
    cell = CellReport(dataset=dataset, variant=variant, n_runs=len(runs))
    if len(runs) < 2:
        logger.warning("Cell %s/%s has %d run(s); marked n/a.", dataset, variant.value, len(runs))
        return cell

    cell.hv_train = stat_report(_metric_samples(runs, "hv_train"))
    cell.hv_test = stat_report(_metric_samples(runs, "hv_test"))
    cell.max_accuracy = float(np.mean(_metric_samples(runs, "max_accuracy")))
    cell.features_at_max_acc = float(np.mean(_metric_samples(runs, "features_at_max_acc")))
    cell.ratio_at_max_acc = float(np.mean(_metric_samples(runs, "ratio_at_max_acc")))
    cell.front_size = float(np.mean(_metric_samples(runs, "front_size")))
    pooled = flatten_list(r.front.feature_counts for r in runs)
    if len(pooled) >= 2:
        cell.feature_count = stat_report(pooled)
    cell.replaced_ratio_pct = 100.0 * float(np.mean([r.replaced_ratio for r in runs]))

    for baseline, reference in baseline_runs.items():
        if len(reference) < 2:
            continue
        verdicts: Dict[str, Verdict] = {}
        for metric, higher in VERDICT_METRICS.items():
            try:
                result = welch_t_test(
                    _metric_samples(runs, metric),
                    _metric_samples(reference, metric),
                    alpha=alpha,
                    higher_is_better=higher,
                    equal_var=equal_var,
                )
            except StatisticsError as e:
                logger.warning("No verdict for %s/%s vs %s: %s", dataset, metric, baseline.value, e)
                continue
            verdicts[metric] = result.verdict
        cell.verdicts[baseline.value] = verdicts
    return cell


def build_report(
    runs: Iterable[RunSummary],
    baselines: Optional[Sequence[Variant | str]] = None,
    failures: Optional[Dict[str, str]] = None,
    alpha: float = 0.05,
    equal_var: bool = False,
) -> ExperimentReport:
    """
    Aggregate run summaries into an ExperimentReport.

    Args:
        runs: Per-run summaries (any order).
        baselines: Variants every cell is tested against; defaults to the two
            ablation baselines that are present.
        failures: Datasets that failed to load, carried into the report.
        alpha: Significance level of the t-tests.
        equal_var: Pooled-variance t-test instead of Welch.
    """
    grouped: Dict[tuple[str, Variant], List[RunSummary]] = defaultdict(list)
    for r in runs:
        grouped[(r.dataset, r.variant)].append(r)
    for key in grouped:
        grouped[key].sort(key=lambda r: r.seed)

    datasets = sorted({d for d, _ in grouped})
    variants = [v for v in Variant if any(gv == v for _, gv in grouped)]
    if baselines is None:
        chosen = [b for b in DEFAULT_BASELINES if b in variants]
    else:
        try:
            chosen = [Variant(b) for b in baselines]
        except ValueError as e:
            raise ConfigError(f"Unknown baseline variant: {e}") from e

    report = ExperimentReport(
        baselines=chosen, datasets=datasets, variants=variants, failures=dict(failures or {})
    )
    for dataset in datasets:
        baseline_runs = {b: grouped.get((dataset, b), []) for b in chosen}
        for variant in variants:
            report.cells.append(
                _build_cell(
                    dataset, variant, grouped.get((dataset, variant), []), baseline_runs, alpha, equal_var
                )
            )

    for baseline in chosen:
        per_variant: Dict[str, Dict[str, WinTieLoss]] = {}
        for variant in variants:
            if variant == baseline:
                continue
            cells = [c for c in report.cells if c.variant == variant]
            per_metric = {}
            for metric in VERDICT_METRICS:
                wins, ties, losses = count_wtl(c.verdicts.get(baseline.value, {}).get(metric) for c in cells)
                per_metric[metric] = WinTieLoss(wins=wins, ties=ties, losses=losses)
            per_variant[variant.value] = per_metric
        report.wtl[baseline.value] = per_variant
    return report


# -------------------------------------------------------------------------
# Tables
# -------------------------------------------------------------------------


def _fmt(value: Optional[float], digits: int = 4) -> str:
    return NA if value is None else f"{value:.{digits}f}"


def _ci_columns(prefix: str, stats: Optional[StatReport]) -> Dict[str, str]:
    if stats is None:
        return {f"{prefix}_mean": NA, f"{prefix}_ci_lo": NA, f"{prefix}_ci_hi": NA}
    return {
        f"{prefix}_mean": _fmt(stats.mean),
        f"{prefix}_ci_lo": _fmt(stats.ci95[0]),
        f"{prefix}_ci_hi": _fmt(stats.ci95[1]),
    }


def _verdict_columns(cell: CellReport, baselines: Sequence[Variant], metrics: Dict[str, str]) -> Dict[str, str]:
    columns = {}
    for b in baselines:
        for metric, label in metrics.items():
            verdict = cell.verdicts.get(b.value, {}).get(metric)
            columns[f"{label}_vs_{b.value}"] = NA if verdict is None else verdict.value
    return columns


def _wtl_rows(report: ExperimentReport, columns: List[str], metrics: Dict[str, str]) -> List[Dict[str, str]]:
    rows = []
    for variant in report.variants:
        row = {c: "" for c in columns}
        row.update(dataset="w/t/l", variant=variant.value)
        for b in report.baselines:
            for metric, label in metrics.items():
                tally = report.wtl.get(b.value, {}).get(variant.value, {}).get(metric)
                row[f"{label}_vs_{b.value}"] = "-" if tally is None else tally.label()
        rows.append(row)
    return rows


def _frame(rows: List[Dict[str, str]], report: ExperimentReport, metrics: Dict[str, str]) -> pd.DataFrame:
    if not rows:
        return pd.DataFrame(columns=["dataset", "variant", "runs"])
    columns = list(rows[0].keys())
    if metrics and report.baselines:
        rows = rows + _wtl_rows(report, columns, metrics)
    return pd.DataFrame(rows, columns=columns)


def report_tables(report: ExperimentReport) -> Dict[str, pd.DataFrame]:
    """
    The four summary tables as string-valued DataFrames ("n/a" for missing cells).
    """
    hv_metrics = {"hv_train": "hv_train", "hv_test": "hv_test"}
    acc_metrics = {"max_accuracy": "accuracy", "features_at_max_acc": "features"}

    hv_rows, acc_rows, feat_rows, repl_rows = [], [], [], []
    for cell in report.cells:
        key = {"dataset": cell.dataset, "variant": cell.variant.value, "runs": str(cell.n_runs)}
        hv_rows.append(
            {
                **key,
                **_ci_columns("hv_train", cell.hv_train),
                **_ci_columns("hv_test", cell.hv_test),
                **_verdict_columns(cell, report.baselines, hv_metrics),
            }
        )
        acc_rows.append(
            {
                **key,
                "max_accuracy": _fmt(cell.max_accuracy),
                "features_at_max_acc": _fmt(cell.features_at_max_acc, 2),
                "ratio_at_max_acc": _fmt(cell.ratio_at_max_acc),
                "front_size": _fmt(cell.front_size, 2),
                **_verdict_columns(cell, report.baselines, acc_metrics),
            }
        )
        feat_rows.append({**key, **_ci_columns("feature_count", cell.feature_count)})
        repl_rows.append({**key, "replaced_ratio_pct": _fmt(cell.replaced_ratio_pct, 2)})

    return {
        "hv": _frame(hv_rows, report, hv_metrics),
        "accuracy": _frame(acc_rows, report, acc_metrics),
        "features": _frame(feat_rows, report, {}),
        "replaced": _frame(repl_rows, report, {}),
    }


def render_tables(report: ExperimentReport) -> str:
    """Console rendering of the summary tables."""
    titles = {
        "hv": "Hypervolume (train / test)",
        "accuracy": "Maximum test accuracy",
        "features": "Front feature counts (95% CI)",
        "replaced": "Replaced solutions (% of population per generation)",
    }
    blocks = []
    for name, frame in report_tables(report).items():
        body = frame.to_string(index=False) if not frame.empty else "(no runs)"
        blocks.append(f"== {titles[name]} ==\n{body}")
    if report.failures:
        failed = "\n".join(f"  {name}: {reason}" for name, reason in sorted(report.failures.items()))
        blocks.append(f"== Failed datasets ==\n{failed}")
    return "\n\n".join(blocks)


def write_report(report: ExperimentReport, out_dir: str | Path) -> Path:
    """Write report.json and the table CSVs under <out>/report/."""
    report_dir = ensure_dir(Path(out_dir) / REPORT_DIRNAME)
    (report_dir / "report.json").write_text(
        pretty_json(report.model_dump(mode="json")) + "\n", encoding="utf-8"
    )
    for name, frame in report_tables(report).items():
        frame.to_csv(report_dir / f"{name}.csv", index=False, lineterminator="\n")
    logger.info("Wrote report to %s", report_dir)
    return report_dir


def summarize(
    out_dir: str | Path,
    baselines: Optional[Sequence[Variant | str]] = None,
    history_paths: Optional[Sequence[str | Path]] = None,
    alpha: float = 0.05,
    equal_var: bool = False,
) -> ExperimentReport:
    """
    Rebuild the report from persisted run files and write it under <out>/report/.

    Args:
        out_dir: Experiment output directory.
        baselines: Variants to test against (defaults to the ablation baselines present).
        history_paths: Explicit run files; defaults to every run under <out>/runs.
        alpha: Significance level.
        equal_var: Pooled-variance t-test instead of Welch.

    Unreadable run files are logged and skipped.
    """
    paths = list(history_paths) if history_paths is not None else discover_runs(out_dir)
    summaries: List[RunSummary] = []
    for path in paths:
        try:
            summaries.append(summarize_run(load_run(path)))
        except RunStoreError as e:
            logger.warning("Skipping run file: %s", e)
    logger.info("Summarizing %d run(s) from %s", len(summaries), out_dir)

    report = build_report(
        summaries, baselines=baselines, failures=load_failures(out_dir), alpha=alpha, equal_var=equal_var
    )
    write_report(report, out_dir)
    return report
