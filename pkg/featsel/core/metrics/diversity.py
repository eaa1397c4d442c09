from __future__ import annotations

from typing import Sequence

import numpy as np

from featsel.core.genome.binary_genome import Genome, stack_packed
from featsel.core.utils.errors import StatisticsError


def avg_pairwise_hamming(pop: Sequence[Genome]) -> float:
    """
    Mean Hamming distance over all unordered pairs of the population.

    Raises:
        StatisticsError: for fewer than two genomes.
    """
    n = len(pop)
    if n < 2:
        raise StatisticsError("Average pairwise Hamming distance needs at least 2 genomes.")
    packed = stack_packed(pop)
    total = 0
    for i in range(n - 1):
        total += int(np.bitwise_count(np.bitwise_xor(packed[i], packed[i + 1 :])).sum())
    return total / (n * (n - 1) / 2)
