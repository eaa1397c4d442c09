"""
Binary genome representation and elementary bit operations.
"""

from featsel.core.genome.binary_genome import (
    Genome,
    popcount,
    popcounts,
    hamming_distance,
    stack_packed,
)

__all__ = ["Genome", "popcount", "popcounts", "hamming_distance", "stack_packed"]
