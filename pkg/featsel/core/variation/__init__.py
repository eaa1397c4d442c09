"""
Variation operators: tournament selection, single-point crossover,
bit-flip mutation and duplicate elimination.
"""

from featsel.core.variation.schemas import VariationConfig
from featsel.core.variation.selection import tournament_select
from featsel.core.variation.crossover import single_point_crossover, splice
from featsel.core.variation.mutation import bitflip_mutation
from featsel.core.variation.duplicates import eliminate_duplicates
from featsel.core.variation.offspring import make_offspring

__all__ = [
    "VariationConfig",
    "tournament_select",
    "single_point_crossover",
    "splice",
    "bitflip_mutation",
    "eliminate_duplicates",
    "make_offspring",
]
