"""
Experiment harness.

High-level interface for:

- Flat config files and the validated ExperimentConfig
- Multi-seed sweeps over datasets x variants on a joblib worker pool
- Line-delimited run persistence
- Report aggregation (means, CIs, t-test verdicts) and curve emission
"""

from featsel.core.experiment.schemas import (
    CellReport,
    ExperimentConfig,
    ExperimentReport,
    WinTieLoss,
)
from featsel.core.experiment.config_loader import (
    build_experiment_config,
    load_experiment_config,
    read_config_file,
)
from featsel.core.experiment.storage.run_store import (
    FrontMember,
    RunMeta,
    StoredRun,
    discover_runs,
    load_failures,
    load_run,
    run_paths,
    save_run,
    write_failures,
)
from featsel.core.experiment.reporting.tables import (
    RunSummary,
    build_report,
    render_tables,
    report_tables,
    summarize,
    summarize_run,
)
from featsel.core.experiment.reporting.curves import curve_frame, emit_all_curves, emit_curves
from featsel.core.experiment.runner import run_experiment

__all__ = [
    "CellReport",
    "ExperimentConfig",
    "ExperimentReport",
    "WinTieLoss",
    "build_experiment_config",
    "load_experiment_config",
    "read_config_file",
    "FrontMember",
    "RunMeta",
    "StoredRun",
    "discover_runs",
    "load_failures",
    "load_run",
    "run_paths",
    "save_run",
    "write_failures",
    "RunSummary",
    "build_report",
    "render_tables",
    "report_tables",
    "summarize",
    "summarize_run",
    "curve_frame",
    "emit_all_curves",
    "emit_curves",
    "run_experiment",
]
