from __future__ import annotations

"""Synthetic desk-scale dataset: separable Gaussian clusters where only a handful of
features carry class information and the rest are noise."""

import numpy as np
from sklearn.datasets import make_classification

from featsel.core.objectives.data.schemas import Dataset


def make_toy_dataset(
    n_samples: int = 120,
    n_features: int = 200,
    n_classes: int = 3,
    n_informative: int = 5,
    class_sep: float = 2.0,
    seed: int = 0,
    name: str = "toy",
) -> Dataset:
    """
    Build the toy dataset.

    The informative features are the first `n_informative` columns; no redundant or
    repeated features are generated, so every other column is pure noise.
    """
    X, y = make_classification(
        n_samples=n_samples,
        n_features=n_features,
        n_informative=n_informative,
        n_redundant=0,
        n_repeated=0,
        n_classes=n_classes,
        n_clusters_per_class=1,
        class_sep=class_sep,
        flip_y=0.0,
        shuffle=False,
        random_state=seed,
    )
    return Dataset(
        name=name,
        X=np.asarray(X, dtype=float),
        y=np.asarray(y, dtype=np.int64),
        class_names=[str(c) for c in range(n_classes)],
    )
