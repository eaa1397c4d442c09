from __future__ import annotations

"""Accuracy extraction and per-run front summaries."""

from typing import List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field

from featsel.core.metrics.hypervolume import hypervolume_2d


class FrontSummary(BaseModel):
    """
    End-of-run statistics of one train Pareto front.

    Attributes:
        hv_train: Hypervolume of the train objectives.
        hv_test: Hypervolume of the non-dominated subset in test objective space.
        max_accuracy: Best test accuracy over the front.
        features_at_max_acc: Popcount of the most accurate member.
        ratio_at_max_acc: Feature ratio of the most accurate member.
        max_train_accuracy: Best train accuracy over the front.
        front_size: Number of train-front members.
        feature_counts: Popcount of every front member.
    """

    hv_train: float = Field(..., ge=0.0, le=1.0)
    hv_test: float = Field(..., ge=0.0, le=1.0)
    max_accuracy: float = Field(..., ge=0.0, le=1.0)
    features_at_max_acc: int = Field(..., ge=0)
    ratio_at_max_acc: float = Field(..., ge=0.0, le=1.0)
    max_train_accuracy: float = Field(..., ge=0.0, le=1.0)
    front_size: int = Field(..., ge=1)
    feature_counts: List[int] = Field(default_factory=list)


def max_accuracy(errors: Sequence[float], feature_counts: Sequence[int]) -> Tuple[float, int]:
    """
    Highest accuracy (1 - error) on a front and the popcount of the member achieving it.

    Ties on accuracy go to the member with fewer features.
    """
    if len(errors) == 0:
        raise ValueError("max_accuracy needs a non-empty front.")
    if len(errors) != len(feature_counts):
        raise ValueError("errors and feature_counts must align.")
    acc = 1.0 - np.asarray(errors, dtype=float)
    counts = np.asarray(feature_counts, dtype=np.int64)
    # primary key: accuracy descending, secondary: feature count ascending
    best = np.lexsort((counts, -acc))[0]
    return float(acc[best]), int(counts[best])


def summarize_front(
    train_objectives: np.ndarray,
    test_objectives: np.ndarray,
    feature_counts: Sequence[int],
    dimension: int,
) -> FrontSummary:
    """
    Build the FrontSummary of one run from its train-front members.
    """
    train_objectives = np.asarray(train_objectives, dtype=float)
    test_objectives = np.asarray(test_objectives, dtype=float)
    acc, count = max_accuracy(test_objectives[:, 0], feature_counts)
    train_acc, _ = max_accuracy(train_objectives[:, 0], feature_counts)
    return FrontSummary(
        hv_train=hypervolume_2d(train_objectives),
        hv_test=hypervolume_2d(test_objectives),
        max_accuracy=acc,
        features_at_max_acc=count,
        ratio_at_max_acc=count / dimension,
        max_train_accuracy=train_acc,
        front_size=len(feature_counts),
        feature_counts=[int(c) for c in feature_counts],
    )
