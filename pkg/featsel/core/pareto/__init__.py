"""
Pareto machinery: dominance, non-dominated sorting, crowding distance, survival.
"""

from featsel.core.pareto.schemas import (
    ObjectiveVector,
    RankedPopulation,
    as_objective_matrix,
)
from featsel.core.pareto.dominance import dominates, domination_matrix
from featsel.core.pareto.sorting import non_dominated_sort, front_ranks
from featsel.core.pareto.crowding import crowding_distance
from featsel.core.pareto.survival import rank_population, survive

__all__ = [
    "ObjectiveVector",
    "RankedPopulation",
    "as_objective_matrix",
    "dominates",
    "domination_matrix",
    "non_dominated_sort",
    "front_ranks",
    "crowding_distance",
    "rank_population",
    "survive",
]
