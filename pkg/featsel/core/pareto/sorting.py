from __future__ import annotations

"""Fast non-dominated sorting (domination counts + dominated lists).

Produces the same fronts as repeatedly peeling off the non-dominated subset,
in O(M N^2). Within a front, indices keep their input order."""

from typing import List, Sequence

import numpy as np

from featsel.core.pareto.dominance import domination_matrix
from featsel.core.pareto.schemas import ObjectiveLike, as_objective_matrix


def non_dominated_sort(objs: Sequence[ObjectiveLike] | np.ndarray) -> List[List[int]]:
    """
    Partition objective vectors into ordered fronts.

    Args:
        objs: Non-empty list of objective vectors (or an (n, 2) array).

    Returns:
        Fronts F1, F2, ... as lists of indices in ascending (input) order.
    """
    F = as_objective_matrix(objs)
    n = F.shape[0]
    if n == 0:
        return []

    dom = domination_matrix(F)
    # number of individuals dominating each column
    counts = dom.sum(axis=0).astype(np.int64)
    dominated_by = [np.flatnonzero(dom[i]) for i in range(n)]

    fronts: List[List[int]] = []
    current = [int(i) for i in np.flatnonzero(counts == 0)]
    while current:
        fronts.append(current)
        nxt: List[int] = []
        for p in current:
            for q in dominated_by[p]:
                counts[q] -= 1
                if counts[q] == 0:
                    nxt.append(int(q))
        current = sorted(nxt)
    return fronts


def front_ranks(fronts: List[List[int]], n: int) -> np.ndarray:
    """1-based rank per index."""
    ranks = np.zeros(n, dtype=np.int64)
    for r, front in enumerate(fronts, start=1):
        ranks[front] = r
    return ranks
