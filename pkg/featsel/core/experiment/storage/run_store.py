from __future__ import annotations

"""Line-delimited storage of finished runs:

<out>/runs/<dataset>/<variant>/seed_0007.history.jsonl
    {"record": "meta", ...}          one line, run identity and totals
    {"record": "generation", ...}    one line per generation
<out>/runs/<dataset>/<variant>/seed_0007.front.jsonl
    {"genome": "<hex>", "popcount": ..., "train_error": ..., ...}   one line per front member

Keys are sorted so the files diff cleanly and regenerate byte-identically."""

import json
import logging
from pathlib import Path
from typing import Dict, List, Literal, Tuple

from pydantic import BaseModel, Field, ValidationError

from featsel.core.config.constants import (
    FAILURES_FILENAME,
    FRONT_SUFFIX,
    HISTORY_SUFFIX,
    RECORD_SCHEMA_VERSION,
    RUNS_DIRNAME,
)
from featsel.core.objectives.data.schemas import SplitDataset
from featsel.core.optimizer.schemas import GenerationRecord, RunResult, Variant
from featsel.core.utils.errors import RunStoreError
from featsel.core.utils.helpers import dumps_record, ensure_dir, pretty_json

logger = logging.getLogger(__name__)


class RunMeta(BaseModel):
    record: Literal["meta"] = "meta"
    schema_version: int = RECORD_SCHEMA_VERSION
    dataset: str
    variant: Variant
    seed: int
    dimension: int = Field(..., ge=1)
    n_train: int = Field(..., ge=1)
    n_test: int = Field(..., ge=1)
    population_size: int
    max_nfc: int
    total_nfc: int
    stopped_early: bool = False


class FrontMember(BaseModel):
    genome: str = Field(..., description="Packed bits as hex, MSB first, zero padded.")
    popcount: int = Field(..., ge=0)
    train_error: float
    train_ratio: float
    test_error: float
    test_ratio: float


class StoredRun(BaseModel):
    """A run as read back from disk."""

    meta: RunMeta
    history: List[GenerationRecord]
    front: List[FrontMember]


def run_paths(out_dir: str | Path, dataset: str, variant: Variant | str, seed: int) -> Tuple[Path, Path]:
    """(history path, front path) of one run."""
    base = Path(out_dir) / RUNS_DIRNAME / dataset / Variant(variant).value / f"seed_{seed:04d}"
    return base.with_name(base.name + HISTORY_SUFFIX), base.with_name(base.name + FRONT_SUFFIX)


def front_path_for(history_path: str | Path) -> Path:
    history_path = Path(history_path)
    stem = history_path.name[: -len(HISTORY_SUFFIX)]
    return history_path.with_name(stem + FRONT_SUFFIX)


def save_run(result: RunResult, split: SplitDataset, out_dir: str | Path) -> Path:
    """
    Persist one RunResult.

    Returns:
        Path of the history file.
    """
    dataset = split.dataset.name
    history_path, front_path = run_paths(out_dir, dataset, result.variant, result.seed)
    ensure_dir(history_path.parent)

    meta = RunMeta(
        dataset=dataset,
        variant=result.variant,
        seed=result.seed,
        dimension=result.dimension,
        n_train=int(split.train.size),
        n_test=int(split.test.size),
        population_size=result.population_size,
        max_nfc=result.max_nfc,
        total_nfc=result.total_nfc,
        stopped_early=result.stopped_early,
    )
    lines = [dumps_record(meta.model_dump(mode="json"))]
    for record in result.history:
        lines.append(dumps_record({"record": "generation", **record.model_dump(mode="json")}))
    history_path.write_text("\n".join(lines) + "\n", encoding="utf-8")

    members = [
        FrontMember(
            genome=genome.to_hex(),
            popcount=genome.popcount(),
            train_error=train[0],
            train_ratio=train[1],
            test_error=test[0],
            test_ratio=test[1],
        )
        for genome, train, test in zip(result.front, result.front_train, result.front_test)
    ]
    front_path.write_text(
        "".join(dumps_record(m.model_dump()) + "\n" for m in members), encoding="utf-8"
    )

    logger.info("Saved run %s/%s/seed %d to %s", dataset, result.variant.value, result.seed, history_path)
    return history_path


def load_run(history_path: str | Path) -> StoredRun:
    """
    Read a run back from its history file and the sibling front file.

    Raises:
        RunStoreError: missing or malformed files.
    """
    history_path = Path(history_path)
    front_path = front_path_for(history_path)
    if not history_path.is_file() or not front_path.is_file():
        raise RunStoreError(f"Run files missing for {history_path}")

    try:
        raw_lines = [json.loads(line) for line in history_path.read_text(encoding="utf-8").splitlines() if line]
        if not all(isinstance(line, dict) for line in raw_lines):
            raise RunStoreError(f"{history_path}: every line must be a JSON object.")
        if not raw_lines or raw_lines[0].get("record") != "meta":
            raise RunStoreError(f"{history_path}: first line is not a meta record.")
        meta = RunMeta(**raw_lines[0])
        history = []
        for line in raw_lines[1:]:
            line.pop("record", None)
            history.append(GenerationRecord(**line))
        front = [
            FrontMember.model_validate(json.loads(line))
            for line in front_path.read_text(encoding="utf-8").splitlines()
            if line
        ]
    except (json.JSONDecodeError, ValidationError) as e:
        raise RunStoreError(f"{history_path}: cannot parse run record: {e}") from e

    return StoredRun(meta=meta, history=history, front=front)


def discover_runs(out_dir: str | Path) -> List[Path]:
    """All history files under <out>/runs, in sorted path order."""
    root = Path(out_dir) / RUNS_DIRNAME
    if not root.is_dir():
        return []
    return sorted(root.rglob(f"*{HISTORY_SUFFIX}"))


def write_failures(out_dir: str | Path, failures: Dict[str, str]) -> Path:
    """Record datasets that could not be loaded: {dataset: reason}."""
    path = ensure_dir(out_dir) / FAILURES_FILENAME
    path.write_text(pretty_json(failures) + "\n", encoding="utf-8")
    return path


def load_failures(out_dir: str | Path) -> Dict[str, str]:
    path = Path(out_dir) / FAILURES_FILENAME
    if not path.is_file():
        return {}
    return json.loads(path.read_text(encoding="utf-8"))
