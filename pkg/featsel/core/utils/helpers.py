from __future__ import annotations

"""This module contains general-purpose helper utilities used across the project."""

import json
from pathlib import Path
from typing import Any, Iterable, List, TypeVar

import numpy as np


T = TypeVar("T")


def make_rng(seed: int | None) -> np.random.Generator:
    """
    Build the single random stream that drives one run.

    Every stochastic step of a run draws from this generator in program order,
    so a run is fully determined by its seed.
    """
    return np.random.Generator(np.random.PCG64(seed))


def flatten_list(list_of_lists: Iterable[Iterable[T]]) -> List[T]:
    """
    Flatten an iterable of iterables into a single list.

    Example:
        flatten_list([[1, 2], [3]]) -> [1, 2, 3]
    """
    flat: List[T] = []
    for sublist in list_of_lists:
        flat.extend(sublist)
    return flat


def to_jsonable(obj: Any) -> Any:
    """
    Convert numpy scalars/arrays nested in dicts and lists into plain Python values.
    """
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


def dumps_record(obj: Any) -> str:
    """
    Serialize one record as a single stable JSON line (sorted keys, no spaces drift).
    """
    return json.dumps(to_jsonable(obj), sort_keys=True, ensure_ascii=False)


def pretty_json(obj: Any, indent: int = 2) -> str:
    """
    Render an object as pretty-printed JSON.

    Falls back to str(obj) if it is not JSON-serializable.
    """
    try:
        return json.dumps(to_jsonable(obj), indent=indent, sort_keys=True, ensure_ascii=False)
    except TypeError:
        return str(obj)


def ensure_dir(path: str | Path) -> Path:
    """
    Create a directory (and parents) if needed and return it as a Path.
    """
    p = Path(path)
    p.mkdir(parents=True, exist_ok=True)
    return p
