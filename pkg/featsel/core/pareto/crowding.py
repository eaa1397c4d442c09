from __future__ import annotations

from typing import Sequence

import numpy as np

from featsel.core.pareto.schemas import ObjectiveLike, as_objective_matrix


def crowding_distance(front_objs: Sequence[ObjectiveLike] | np.ndarray) -> np.ndarray:
    """
    Per-objective neighbor-gap crowding distance of one front.

    For each objective the members are sorted (stable); the two extremes get +inf and an
    interior member accumulates (f[i+1] - f[i-1]) / (f_max - f_min). A constant objective
    column contributes 0 to every member. Fronts of one or two members are all boundary.

    Returns:
        Float array aligned with the input order.
    """
    F = as_objective_matrix(front_objs)
    n = F.shape[0]
    if n <= 2:
        return np.full(n, np.inf)

    distances = np.zeros(n, dtype=float)
    for column in F.T:
        order = np.argsort(column, kind="stable")
        sorted_col = column[order]
        span = sorted_col[-1] - sorted_col[0]
        if span == 0:
            continue
        distances[order[0]] = np.inf
        distances[order[-1]] = np.inf
        distances[order[1:-1]] += (sorted_col[2:] - sorted_col[:-2]) / span
    return distances
