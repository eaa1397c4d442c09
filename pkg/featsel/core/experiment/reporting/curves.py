from __future__ import annotations

"""Long-format generation curves for external plotting.

columns: dataset, variant, seed, generation, nfc, value, mean_value
  hv              -> hv_train of the population's first front
  hamming         -> average pairwise Hamming distance
  replaced_ratio  -> replaced_count / N (0 in bypassed generations)
mean_value is the mean of `value` over seeds at the same (dataset, variant, generation)."""

import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

import pandas as pd

from featsel.core.config.constants import CURVE_KINDS, CURVES_DIRNAME
from featsel.core.experiment.storage.run_store import StoredRun, discover_runs, load_run
from featsel.core.optimizer.schemas import GenerationRecord
from featsel.core.utils.errors import ConfigError, RunStoreError
from featsel.core.utils.helpers import ensure_dir

logger = logging.getLogger(__name__)

CURVE_COLUMNS = ["dataset", "variant", "seed", "generation", "nfc", "value", "mean_value"]

_EXTRACTORS: Dict[str, Callable[[GenerationRecord, StoredRun], float]] = {
    "hv": lambda rec, run: rec.hv_train,
    "hamming": lambda rec, run: rec.avg_pairwise_hamming,
    "replaced_ratio": lambda rec, run: rec.replaced_count / run.meta.population_size,
}


def curve_frame(runs: Sequence[StoredRun], kind: str) -> pd.DataFrame:
    """Build the long-format curve table of one kind from loaded runs."""
    if kind not in _EXTRACTORS:
        raise ConfigError(f"Unknown curve kind '{kind}'; expected one of {CURVE_KINDS}.")
    extract = _EXTRACTORS[kind]
    rows = [
        {
            "dataset": run.meta.dataset,
            "variant": run.meta.variant.value,
            "seed": run.meta.seed,
            "generation": rec.generation,
            "nfc": rec.nfc_consumed,
            "value": float(extract(rec, run)),
        }
        for run in runs
        for rec in run.history
    ]
    if not rows:
        return pd.DataFrame(columns=CURVE_COLUMNS)

    frame = pd.DataFrame(rows)
    frame = frame.sort_values(["dataset", "variant", "seed", "generation"], kind="stable")
    frame["mean_value"] = frame.groupby(["dataset", "variant", "generation"])["value"].transform("mean")
    return frame.reset_index(drop=True)[CURVE_COLUMNS]


def emit_curves(
    history_paths: Sequence[str | Path],
    kind: str,
    out_path: str | Path,
) -> tuple[Path, List[str]]:
    """
    Write one curve CSV.

    Missing or unreadable run files are listed and skipped.

    Returns:
        (csv path, skipped files)
    """
    runs: List[StoredRun] = []
    skipped: List[str] = []
    for path in history_paths:
        try:
            runs.append(load_run(path))
        except RunStoreError as e:
            logger.warning("Skipping run file %s: %s", path, e)
            skipped.append(str(path))

    frame = curve_frame(runs, kind)
    out_path = Path(out_path)
    ensure_dir(out_path.parent)
    frame.to_csv(out_path, index=False, lineterminator="\n", float_format="%.10g")
    logger.info("Wrote %d %s curve rows to %s", len(frame), kind, out_path)
    return out_path, skipped


def emit_all_curves(
    out_dir: str | Path,
    kinds: Optional[Sequence[str]] = None,
    history_paths: Optional[Sequence[str | Path]] = None,
) -> List[Path]:
    """Write <out>/curves/<kind>.csv for each kind (all kinds by default)."""
    paths = list(history_paths) if history_paths is not None else discover_runs(out_dir)
    curves_dir = Path(out_dir) / CURVES_DIRNAME
    written = []
    for kind in kinds or CURVE_KINDS:
        path, _ = emit_curves(paths, kind, curves_dir / f"{kind}.csv")
        written.append(path)
    return written
