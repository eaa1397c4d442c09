from __future__ import annotations

import numpy as np

from featsel.core.genome.binary_genome import Genome


def bitflip_mutation(g: Genome, p: float, rng: np.random.Generator) -> Genome:
    """
    Flip each bit independently with probability p.

    One rng.random(d) draw per call regardless of p.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Mutation probability must be in [0, 1], got {p}.")
    flips = rng.random(len(g)) < p
    # packbits zero-pads, so padding bits of the result stay zero
    return Genome(np.bitwise_xor(g.packed, np.packbits(flips)), len(g))
