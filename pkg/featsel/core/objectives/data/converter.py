from __future__ import annotations

"""Turn matrix-file dumps into the dataset CSV contract.

Supported inputs:
- MATLAB .mat files holding a feature matrix `X` and a label vector `Y`
  (the layout the public feature-selection benchmark repositories ship)
- delimited numeric text dumps (comma, tab or whitespace) whose last column is the label"""

import logging
from pathlib import Path

import numpy as np
import pandas as pd
from scipy.io import loadmat

from featsel.core.objectives.data.dataset_loader import encode_labels, save_dataset
from featsel.core.objectives.data.schemas import Dataset
from featsel.core.utils.errors import DatasetParseError

logger = logging.getLogger(__name__)


def _from_mat(path: Path, x_key: str, y_key: str) -> tuple[np.ndarray, np.ndarray]:
    contents = loadmat(path)
    if x_key not in contents or y_key not in contents:
        keys = sorted(k for k in contents if not k.startswith("__"))
        raise DatasetParseError(
            f"{path.name} lacks variables '{x_key}'/'{y_key}' (found: {keys})"
        )
    X = np.asarray(contents[x_key], dtype=float)
    y = np.asarray(contents[y_key]).ravel()
    return X, y


def _from_text(path: Path) -> tuple[np.ndarray, np.ndarray]:
    frame = pd.read_csv(path, sep=None, engine="python", header=None, comment="#")
    if frame.shape[1] < 2:
        raise DatasetParseError(f"{path.name} needs at least one feature and a label column")
    features = frame.iloc[:, :-1].apply(pd.to_numeric, errors="coerce")
    bad = features.isna().to_numpy()
    if bad.any():
        row_pos, _ = np.argwhere(bad)[0]
        raise DatasetParseError("non-numeric or missing feature value", row=int(row_pos) + 1)
    return features.to_numpy(dtype=float), frame.iloc[:, -1].to_numpy()


def convert_matrix_file(
    source: str | Path,
    target: str | Path,
    x_key: str = "X",
    y_key: str = "Y",
    name: str | None = None,
) -> Dataset:
    """
    Convert a .mat or delimited text dump into a dataset CSV.

    Args:
        source: Input file.
        target: Output CSV path.
        x_key / y_key: Variable names inside .mat files.
        name: Dataset identifier; defaults to the source stem.

    Returns:
        The converted Dataset (already written to `target`).
    """
    source = Path(source)
    if not source.exists():
        raise DatasetParseError(f"Input file not found: {source}")

    if source.suffix.lower() == ".mat":
        X, raw_y = _from_mat(source, x_key, y_key)
    else:
        X, raw_y = _from_text(source)

    if X.shape[0] != raw_y.shape[0]:
        raise DatasetParseError(
            f"{source.name}: {X.shape[0]} feature rows but {raw_y.shape[0]} labels"
        )

    y, class_names = encode_labels(pd.Series(raw_y))
    dataset = Dataset(name=name or source.stem, X=X, y=y, class_names=class_names)
    save_dataset(dataset, target)
    logger.info(
        "Converted %s -> %s (d=%d, n=%d, classes=%d)",
        source,
        target,
        dataset.n_features,
        dataset.n_samples,
        dataset.n_classes,
    )
    return dataset
