from __future__ import annotations

"""Offspring batch: N children from N/2 mating pairs, then duplicate elimination.

Per pair the draw order is: tournament 1, tournament 2, crossover coin,
cut point (only when recombining), mutation of child 1, mutation of child 2."""

import logging
from typing import List, Sequence

import numpy as np

from featsel.core.genome.binary_genome import Genome
from featsel.core.pareto.schemas import RankedPopulation
from featsel.core.variation.crossover import single_point_crossover
from featsel.core.variation.duplicates import eliminate_duplicates
from featsel.core.variation.mutation import bitflip_mutation
from featsel.core.variation.schemas import VariationConfig
from featsel.core.variation.selection import tournament_select

logger = logging.getLogger(__name__)


def make_offspring(
    genomes: Sequence[Genome],
    ranked: RankedPopulation,
    config: VariationConfig,
    rng: np.random.Generator,
    n_children: int | None = None,
) -> List[Genome]:
    """
    Generate one offspring batch.

    Args:
        genomes: Current population, aligned with `ranked`.
        ranked: Fronts/crowding of the current population (used by the tournaments).
        config: Operator settings.
        rng: Run random stream.
        n_children: Batch size before elimination; defaults to the population size.

    Returns:
        Children after duplicate elimination (possibly fewer than n_children).
    """
    n_children = len(genomes) if n_children is None else n_children
    children: List[Genome] = []
    while len(children) < n_children:
        p1 = genomes[tournament_select(ranked, rng)]
        p2 = genomes[tournament_select(ranked, rng)]
        if rng.random() < config.crossover_prob:
            c1, c2 = single_point_crossover(p1, p2, rng)
        else:
            c1, c2 = p1, p2
        children.append(bitflip_mutation(c1, config.mutation_prob, rng))
        children.append(bitflip_mutation(c2, config.mutation_prob, rng))
    children = children[:n_children]

    if config.duplicate_elimination:
        kept = eliminate_duplicates(children, genomes)
        if len(kept) < len(children):
            logger.debug("Dropped %d duplicate children.", len(children) - len(kept))
        return kept
    return children
