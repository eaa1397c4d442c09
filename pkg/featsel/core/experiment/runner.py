from __future__ import annotations

"""Experiment sweep:

for each dataset (parse failure -> recorded, dataset skipped)
    for run i in 0..runs-1:  seed = seed_base + i, one split shared by every variant
        for each variant:    optimizer run -> persisted run files
then the report is aggregated from the files on disk."""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from joblib import Parallel, delayed

from featsel.core.experiment.reporting.tables import summarize
from featsel.core.experiment.schemas import ExperimentConfig, ExperimentReport
from featsel.core.experiment.storage.run_store import save_run, write_failures
from featsel.core.objectives.data.dataset_loader import load_dataset
from featsel.core.objectives.data.schemas import SplitDataset
from featsel.core.objectives.data.splitting import split
from featsel.core.optimizer.diverse_nsga2 import run as run_optimizer
from featsel.core.optimizer.schemas import Variant
from featsel.core.utils.errors import FeatselError
from featsel.core.utils.helpers import ensure_dir

logger = logging.getLogger(__name__)


def _run_one(config: ExperimentConfig, data: SplitDataset, variant: Variant) -> Path:
    """Worker body: one (dataset, variant, seed) run, persisted."""
    result = run_optimizer(
        config.optimizer_config(variant, data.seed),
        data,
        k=config.k,
        normalize=config.normalize,
    )
    return save_run(result, data, config.output_dir)


def _prepare_splits(config: ExperimentConfig, path: str) -> List[SplitDataset]:
    ds = load_dataset(path, name=config.dataset_name(path))
    logger.info(
        "Loaded '%s': %d samples, %d features, %d classes",
        ds.name,
        ds.n_samples,
        ds.n_features,
        ds.n_classes,
    )
    return [
        split(ds, seed, test_fraction=config.test_fraction, stratify=config.stratify)
        for seed in config.seeds
    ]


def run_experiment(
    config: ExperimentConfig,
    baselines: Optional[Sequence[Variant | str]] = None,
) -> ExperimentReport:
    """
    Run every dataset x seed x variant of the sweep, persist the runs, then summarize.

    A dataset that cannot be loaded or split is recorded in failures.json and in the
    report; the other datasets still run.
    """
    ensure_dir(config.output_dir)
    failures: Dict[str, str] = {}
    tasks = []

    for path in config.datasets:
        name = config.dataset_name(path)
        try:
            splits = _prepare_splits(config, path)
        except (FeatselError, OSError) as e:
            logger.warning("Skipping dataset '%s': %s", name, e)
            failures[name] = str(e)
            continue
        for data in splits:
            for variant in config.variants:
                tasks.append(delayed(_run_one)(config, data, variant))

    logger.info(
        "Dispatching %d runs (%d variants x %d seeds) on %d worker(s)",
        len(tasks),
        len(config.variants),
        config.runs,
        config.n_jobs,
    )
    paths = Parallel(n_jobs=config.n_jobs)(tasks) if tasks else []
    logger.info("Finished %d runs", len(paths))

    write_failures(config.output_dir, failures)
    return summarize(config.output_dir, baselines=baselines)

