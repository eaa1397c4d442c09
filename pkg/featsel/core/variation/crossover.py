from __future__ import annotations

from typing import Tuple

import numpy as np

from featsel.core.genome.binary_genome import Genome
from featsel.core.utils.errors import DimensionError


def splice(a: Genome, b: Genome, cut: int) -> Tuple[Genome, Genome]:
    """
    child1 = a[:cut] + b[cut:], child2 = b[:cut] + a[cut:].
    """
    if len(a) != len(b):
        raise DimensionError(f"Parent lengths differ: {len(a)} != {len(b)}.")
    if not 0 < cut < len(a):
        raise DimensionError(f"Cut point {cut} outside 1..{len(a) - 1}.")
    bits_a, bits_b = a.bits, b.bits
    child1 = np.concatenate([bits_a[:cut], bits_b[cut:]])
    child2 = np.concatenate([bits_b[:cut], bits_a[cut:]])
    return Genome.from_bits(child1), Genome.from_bits(child2)


def single_point_crossover(
    a: Genome, b: Genome, rng: np.random.Generator
) -> Tuple[Genome, Genome]:
    """
    Single-point crossover with the cut drawn uniformly from {1, ..., d-1}.

    Raises:
        DimensionError: if parents differ in length or d < 2.
    """
    if len(a) != len(b):
        raise DimensionError(f"Parent lengths differ: {len(a)} != {len(b)}.")
    if len(a) < 2:
        raise DimensionError("Single-point crossover needs d >= 2.")
    cut = int(rng.integers(1, len(a)))
    return splice(a, b, cut)
