from __future__ import annotations

"""Objective-space data model.

ObjectiveVector -> (classification error, selected-feature ratio), both minimized, both in [0,1].
RankedPopulation -> objective matrix + fronts + per-individual rank and crowding distance."""

from typing import List, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from featsel.core.config.constants import N_OBJECTIVES


class ObjectiveVector(BaseModel):
    """
    Two minimized objectives of one feature subset.

    Attributes:
        f1: Classification error in [0, 1].
        f2: Ratio of selected features in [0, 1].
    """

    model_config = ConfigDict(frozen=True)

    f1: float = Field(..., ge=0.0, le=1.0, allow_inf_nan=False)
    f2: float = Field(..., ge=0.0, le=1.0, allow_inf_nan=False)

    def as_tuple(self) -> Tuple[float, float]:
        return (self.f1, self.f2)


ObjectiveLike = ObjectiveVector | Sequence[float] | np.ndarray


def as_objective_matrix(objs: Sequence[ObjectiveLike] | np.ndarray) -> np.ndarray:
    """
    Normalize a list of ObjectiveVectors / pairs / an (n, 2) array into a float (n, 2) array.
    """
    if isinstance(objs, np.ndarray):
        arr = np.asarray(objs, dtype=float)
    else:
        rows = [o.as_tuple() if isinstance(o, ObjectiveVector) else tuple(o) for o in objs]
        arr = np.asarray(rows, dtype=float)
    if arr.size == 0:
        return arr.reshape(0, N_OBJECTIVES)
    if arr.ndim != 2 or arr.shape[1] != N_OBJECTIVES:
        raise ValueError(f"Expected an (n, {N_OBJECTIVES}) objective matrix, got {arr.shape}.")
    return arr


class RankedPopulation(BaseModel):
    """
    Objective matrix annotated by non-dominated sorting.

    Attributes:
        objectives: (n, 2) array.
        fronts: Ordered fronts F1, F2, ... as lists of row indices.
        ranks: 1-based front rank per row.
        crowding: Crowding distance per row (inf for front boundaries).
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    objectives: np.ndarray
    fronts: List[List[int]]
    ranks: np.ndarray
    crowding: np.ndarray

    @property
    def size(self) -> int:
        return int(self.objectives.shape[0])

    @property
    def front_count(self) -> int:
        return len(self.fronts)

    @property
    def last_front(self) -> List[int]:
        return self.fronts[-1] if self.fronts else []
