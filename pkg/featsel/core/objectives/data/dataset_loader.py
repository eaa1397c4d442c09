from __future__ import annotations

"""Dataset CSV contract:

- UTF-8, first line is a header
- one row per sample
- d numeric feature columns, then a final label column named "class"
  (integer or string labels)
- no missing cells

Errors name the offending file line (the header is line 1)."""

import logging
import re
from pathlib import Path

import numpy as np
import pandas as pd
from pydantic import ValidationError

from featsel.core.config.constants import LABEL_COLUMN
from featsel.core.objectives.data.schemas import Dataset
from featsel.core.utils.errors import DatasetParseError

logger = logging.getLogger(__name__)

_PANDAS_LINE_RE = re.compile(r"line (\d+)")


def encode_labels(raw: pd.Series) -> tuple[np.ndarray, list[str]]:
    """
    Map label strings to 0..n_classes-1. Integer-looking labels sort numerically.
    """
    values = raw.astype(str).str.strip()
    numeric = pd.to_numeric(values, errors="coerce")
    if numeric.notna().all() and np.all(numeric == np.round(numeric)):
        uniques = np.unique(numeric.astype(np.int64))
        codes = np.searchsorted(uniques, numeric.astype(np.int64).to_numpy())
        return codes.astype(np.int64), [str(u) for u in uniques]
    uniques, codes = np.unique(values.to_numpy(), return_inverse=True)
    return codes.astype(np.int64), [str(u) for u in uniques]


def load_dataset(path: str | Path, name: str | None = None) -> Dataset:
    """
    Parse and validate a dataset CSV.

    Args:
        path: CSV file following the contract above.
        name: Optional identifier; defaults to the file stem.

    Returns:
        Validated Dataset.

    Raises:
        DatasetParseError: malformed row, missing cell, non-numeric feature,
            missing "class" column or fewer than two classes.
    """
    path = Path(path)
    if not path.exists():
        raise DatasetParseError(f"Dataset file not found: {path}")

    try:
        frame = pd.read_csv(
            path,
            dtype=str,
            keep_default_na=False,
            encoding="utf-8",
            skipinitialspace=True,
        )
    except pd.errors.ParserError as e:
        match = _PANDAS_LINE_RE.search(str(e))
        line = int(match.group(1)) if match else None
        raise DatasetParseError(f"malformed row in {path.name}: {e}", row=line) from e
    except (pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise DatasetParseError(f"cannot read {path.name}: {e}") from e

    columns = [str(c).strip() for c in frame.columns]
    if not columns or columns[-1] != LABEL_COLUMN:
        raise DatasetParseError(
            f"last column of {path.name} must be named '{LABEL_COLUMN}', got '{columns[-1] if columns else ''}'"
        )
    if len(columns) < 2:
        raise DatasetParseError(f"{path.name} has no feature columns")

    # missing cells: empty strings, or NaN when a row is short
    missing = frame.isna() | frame.apply(lambda col: col.astype(str).str.strip() == "")
    if missing.to_numpy().any():
        row_pos, col_pos = np.argwhere(missing.to_numpy())[0]
        raise DatasetParseError(
            f"missing value in column '{columns[col_pos]}'", row=int(row_pos) + 2
        )

    features = frame.iloc[:, :-1].apply(pd.to_numeric, errors="coerce")
    bad = features.isna().to_numpy()
    if bad.any():
        row_pos, col_pos = np.argwhere(bad)[0]
        raise DatasetParseError(
            f"non-numeric value {frame.iat[row_pos, col_pos]!r} in column '{columns[col_pos]}'",
            row=int(row_pos) + 2,
        )

    # to_numeric can be off by one ulp, so it only locates bad cells
    try:
        X = np.char.strip(frame.iloc[:, :-1].to_numpy(dtype=str)).astype(np.float64)
    except ValueError as e:
        raise DatasetParseError(f"non-numeric value in {path.name}: {e}") from e

    y, class_names = encode_labels(frame.iloc[:, -1])
    try:
        dataset = Dataset(
            name=name or path.stem,
            X=X,
            y=y,
            class_names=class_names,
        )
    except ValidationError as e:
        raise DatasetParseError(f"invalid dataset {path.name}: {e.errors()[0]['msg']}") from e

    logger.info(
        "Loaded dataset '%s': d=%d, n_samples=%d, n_classes=%d",
        dataset.name,
        dataset.n_features,
        dataset.n_samples,
        dataset.n_classes,
    )
    return dataset


def save_dataset(dataset: Dataset, path: str | Path) -> Path:
    """
    Write a dataset in the CSV contract (feature columns f0..f{d-1}, then "class").
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame(
        dataset.X, columns=[f"f{i}" for i in range(dataset.n_features)]
    )
    if dataset.class_names:
        frame[LABEL_COLUMN] = [dataset.class_names[i] for i in dataset.y]
    else:
        frame[LABEL_COLUMN] = dataset.y
    frame.to_csv(path, index=False, encoding="utf-8")
    logger.info("Saved dataset '%s' to %s", dataset.name, path)
    return path
