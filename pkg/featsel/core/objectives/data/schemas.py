from __future__ import annotations

"""Dataset and train/test split models.

Dataset       -> X (n_samples x d floats), y (integer labels in [0, n_classes)), name.
SplitDataset  -> disjoint train/test index sets covering every sample, plus the seed."""

from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class Dataset(BaseModel):
    """
    Numeric feature matrix with integer class labels.

    Attributes:
        name: Identifier (usually the file stem).
        X: (n_samples, d) float matrix without missing values.
        y: (n_samples,) integer labels in [0, n_classes).
        class_names: Original label values, indexed by encoded label.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    name: str = Field(..., min_length=1)
    X: np.ndarray
    y: np.ndarray
    class_names: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_arrays(self) -> "Dataset":
        if self.X.ndim != 2:
            raise ValueError(f"X must be 2-D, got shape {self.X.shape}.")
        if self.y.ndim != 1 or self.y.shape[0] != self.X.shape[0]:
            raise ValueError("y must be 1-D with one label per row of X.")
        if not np.all(np.isfinite(self.X)):
            raise ValueError("X contains missing or non-finite values.")
        if not np.issubdtype(self.y.dtype, np.integer):
            raise ValueError("y must hold integer labels.")
        n_classes = self.n_classes
        if n_classes < 2:
            raise ValueError(f"Need at least 2 classes, got {n_classes}.")
        if self.y.size and (self.y.min() < 0 or self.y.max() >= n_classes):
            raise ValueError("Labels must lie in [0, n_classes).")
        return self

    @property
    def n_samples(self) -> int:
        return int(self.X.shape[0])

    @property
    def n_features(self) -> int:
        return int(self.X.shape[1])

    @property
    def n_classes(self) -> int:
        if self.class_names:
            return len(self.class_names)
        return int(self.y.max()) + 1 if self.y.size else 0


class SplitDataset(BaseModel):
    """
    One Monte Carlo cross-validation split of a dataset.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    dataset: Dataset
    train: np.ndarray
    test: np.ndarray
    seed: int

    @model_validator(mode="after")
    def _check_partition(self) -> "SplitDataset":
        n = self.dataset.n_samples
        both = np.concatenate([self.train, self.test])
        if both.size != n or np.unique(both).size != n:
            raise ValueError("train and test must be disjoint and cover all samples.")
        return self

    @property
    def X_train(self) -> np.ndarray:
        return self.dataset.X[self.train]

    @property
    def y_train(self) -> np.ndarray:
        return self.dataset.y[self.train]

    @property
    def X_test(self) -> np.ndarray:
        return self.dataset.X[self.test]

    @property
    def y_test(self) -> np.ndarray:
        return self.dataset.y[self.test]
