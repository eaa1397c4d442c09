from __future__ import annotations

"""Elitist environmental survival: ranking + crowding, then truncation to N."""

from typing import List, Sequence

import numpy as np

from featsel.core.pareto.crowding import crowding_distance
from featsel.core.pareto.schemas import ObjectiveLike, RankedPopulation, as_objective_matrix
from featsel.core.pareto.sorting import front_ranks, non_dominated_sort


def rank_population(objs: Sequence[ObjectiveLike] | np.ndarray) -> RankedPopulation:
    """
    Run non-dominated sorting and per-front crowding distance.
    """
    F = as_objective_matrix(objs)
    fronts = non_dominated_sort(F)
    crowding = np.zeros(F.shape[0], dtype=float)
    for front in fronts:
        crowding[front] = crowding_distance(F[front])
    return RankedPopulation(
        objectives=F,
        fronts=fronts,
        ranks=front_ranks(fronts, F.shape[0]),
        crowding=crowding,
    )


def survive(merged: RankedPopulation, N: int) -> List[int]:
    """
    Pick N survivors.

    Whole fronts are admitted in rank order; the first front that does not fit is
    truncated by descending crowding distance, ties kept in input order.

    Returns:
        Surviving indices: admitted fronts in order, then the truncated front's picks.
    """
    if merged.size < N:
        raise ValueError(f"Cannot select {N} survivors from {merged.size} individuals.")

    chosen: List[int] = []
    for front in merged.fronts:
        room = N - len(chosen)
        if room <= 0:
            break
        if len(front) <= room:
            chosen.extend(front)
            continue
        front_arr = np.asarray(front)
        order = np.argsort(-merged.crowding[front_arr], kind="stable")
        chosen.extend(int(i) for i in front_arr[order[:room]])
    return chosen
