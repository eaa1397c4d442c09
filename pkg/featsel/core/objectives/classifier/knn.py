from __future__ import annotations

"""k-nearest-neighbour classifier over a feature subset.

Rules:
- Euclidean distance over the selected columns only
- the k nearest training rows vote; distance ties at the k-th place go to the
  lower training index (stable sort)
- majority label wins; tied labels are split by the smallest summed neighbour
  distance, then by the smallest label index
- fewer than k training rows -> all of them vote
- leave-one-out mode: a training row never votes for itself"""

from typing import Optional

import numpy as np
from scipy.spatial.distance import cdist

from featsel.core.utils.errors import DegenerateGenomeError


def _vote(
    neighbor_labels: np.ndarray,
    neighbor_dists: np.ndarray,
    n_classes: int,
) -> np.ndarray:
    """
    Resolve votes for a (q, k) block of neighbour labels/distances.
    """
    q, k = neighbor_labels.shape
    counts = np.zeros((q, n_classes), dtype=np.int64)
    sums = np.zeros((q, n_classes), dtype=float)
    rows = np.repeat(np.arange(q), k)
    labels = neighbor_labels.ravel()
    np.add.at(counts, (rows, labels), 1)
    # accumulates in neighbour order, nearest first
    np.add.at(sums, (rows, labels), neighbor_dists.ravel())

    candidates = counts == counts.max(axis=1, keepdims=True)
    masked = np.where(candidates, sums, np.inf)
    # argmin returns the first (smallest) label among equal sums
    return np.argmin(masked, axis=1)


def knn_predict_batch(
    train_X: np.ndarray,
    train_y: np.ndarray,
    query_X: np.ndarray,
    k: int = 5,
    leave_one_out: bool = False,
    n_classes: Optional[int] = None,
) -> np.ndarray:
    """
    Predict labels for every row of query_X.

    Args:
        train_X: (n_train, s) training rows, already restricted to the selected features.
        train_y: (n_train,) integer labels.
        query_X: (q, s) rows to classify. With leave_one_out=True this must be train_X itself.
        k: Number of neighbours.
        leave_one_out: Exclude each row's own distance (query i == training row i).
        n_classes: Label range; defaults to max(train_y) + 1.

    Returns:
        (q,) predicted labels.

    Raises:
        DegenerateGenomeError: if no feature columns are selected.
    """
    train_X = np.asarray(train_X, dtype=float)
    query_X = np.asarray(query_X, dtype=float)
    train_y = np.asarray(train_y, dtype=np.int64)
    if train_X.ndim != 2 or train_X.shape[1] == 0:
        raise DegenerateGenomeError("k-NN needs at least one selected feature.")
    if train_X.shape[0] == 0:
        raise ValueError("k-NN needs at least one training row.")

    n_classes = int(train_y.max()) + 1 if n_classes is None else n_classes
    D = cdist(query_X, train_X, metric="euclidean")

    available = train_X.shape[0]
    if leave_one_out:
        if D.shape[0] != D.shape[1]:
            raise ValueError("leave_one_out requires query_X to be the training matrix.")
        np.fill_diagonal(D, np.inf)
        available -= 1
        if available == 0:
            raise ValueError("leave-one-out needs at least two training rows.")

    k_eff = min(k, available)
    order = np.argsort(D, axis=1, kind="stable")[:, :k_eff]
    neighbor_dists = np.take_along_axis(D, order, axis=1)
    return _vote(train_y[order], neighbor_dists, n_classes)


def knn_predict(
    train_X: np.ndarray,
    train_y: np.ndarray,
    query_row: np.ndarray,
    k: int = 5,
) -> int:
    """
    Predict the label of a single query row.
    """
    query = np.asarray(query_row, dtype=float).reshape(1, -1)
    return int(knn_predict_batch(train_X, train_y, query, k=k)[0])
