from __future__ import annotations

import numpy as np

from featsel.core.pareto.schemas import RankedPopulation
from featsel.core.utils.errors import SelectionError


def tournament_select(pop: RankedPopulation, rng: np.random.Generator) -> int:
    """
    Binary tournament on (rank, crowding).

    Two distinct members are drawn uniformly. The lower front rank wins; on equal rank
    the larger crowding distance wins; on a full tie the first-drawn member wins.

    Raises:
        SelectionError: if the population has fewer than two members.
    """
    if pop.size < 2:
        raise SelectionError(f"Tournament needs at least 2 members, got {pop.size}.")

    a, b = (int(i) for i in rng.choice(pop.size, size=2, replace=False))
    if pop.ranks[a] != pop.ranks[b]:
        return a if pop.ranks[a] < pop.ranks[b] else b
    if pop.crowding[b] > pop.crowding[a]:
        return b
    return a
