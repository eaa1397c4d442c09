from __future__ import annotations

"""Monte Carlo cross-validation: one random 80/20 split per run seed."""

import logging

import numpy as np
from sklearn.model_selection import train_test_split

from featsel.core.config.settings import settings
from featsel.core.objectives.data.schemas import Dataset, SplitDataset
from featsel.core.utils.errors import ConfigError, DatasetParseError

logger = logging.getLogger(__name__)


def held_out_count(n_samples: int, test_fraction: float) -> int:
    """Number of test rows: round(test_fraction * n_samples)."""
    return int(round(test_fraction * n_samples))


def split(
    ds: Dataset,
    seed: int,
    test_fraction: float = settings.TEST_FRACTION,
    stratify: bool = False,
) -> SplitDataset:
    """
    Random train/test split, deterministic given the seed.

    Args:
        ds: Dataset with at least 5 samples.
        seed: Split seed (shared by all variants of the same run index).
        test_fraction: Fraction of rows held out, in (0, 0.5].
        stratify: Preserve class proportions (off by default).

    Returns:
        SplitDataset with sorted train/test index arrays.
    """
    if ds.n_samples < 5:
        raise DatasetParseError(f"Need at least 5 samples to split, got {ds.n_samples}.")
    if not 0.0 < test_fraction <= 0.5:
        raise ConfigError(f"test_fraction must be in (0, 0.5], got {test_fraction}.")

    n_test = max(1, held_out_count(ds.n_samples, test_fraction))
    indices = np.arange(ds.n_samples)
    try:
        train_idx, test_idx = train_test_split(
            indices,
            test_size=n_test,
            random_state=seed,
            shuffle=True,
            stratify=ds.y if stratify else None,
        )
    except ValueError as e:
        raise ConfigError(f"Cannot split '{ds.name}' (stratify={stratify}): {e}") from e

    train_idx = np.sort(train_idx)
    test_idx = np.sort(test_idx)
    missing = np.setdiff1d(np.unique(ds.y), np.unique(ds.y[train_idx]))
    if missing.size:
        logger.warning(
            "Split seed %d of '%s' leaves classes %s out of the training set.",
            seed,
            ds.name,
            missing.tolist(),
        )
    return SplitDataset(dataset=ds, train=train_idx, test=test_idx, seed=seed)
