from __future__ import annotations

"""Last-front replacement.

After survival, the worst front is swapped for fresh Uniform Covering individuals
whose popcounts lie in [alpha, beta] = [min, max] popcount of the surviving
population (alpha clamped to >= 1). Skipped when the population is a single front."""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from featsel.core.genome.binary_genome import Genome, popcounts
from featsel.core.initialization.initializers import genuine_init
from featsel.core.optimizer.population import Population
from featsel.core.pareto.schemas import RankedPopulation
from featsel.core.utils.errors import ReplacementBypass

logger = logging.getLogger(__name__)


def size_window(genomes: Sequence[Genome]) -> Tuple[int, int]:
    """
    (alpha, beta): smallest and largest popcount in the population, alpha >= 1.
    """
    if not genomes:
        raise ValueError("size_window needs a non-empty population.")
    counts = popcounts(genomes)
    alpha = max(1, int(counts.min()))
    beta = max(alpha, int(counts.max()))
    return alpha, beta


def generate_replacements(
    n: int,
    dimension: int,
    window: Tuple[int, int],
    existing: Iterable[Genome],
    rng: np.random.Generator,
    attempts: int = 10,
) -> List[Genome]:
    """
    Draw n Uniform Covering genomes inside the window.

    A draw identical to a population member or an earlier replacement is redrawn,
    up to `attempts` draws in total, then accepted as is.
    """
    alpha, beta = window
    seen = set(existing)
    fresh: List[Genome] = []
    for _ in range(n):
        candidate = genuine_init(1, dimension, alpha, beta, rng)[0]
        tries = 1
        while candidate in seen and tries < attempts:
            candidate = genuine_init(1, dimension, alpha, beta, rng)[0]
            tries += 1
        if candidate in seen:
            logger.debug("Accepting a duplicate replacement after %d attempts.", tries)
        seen.add(candidate)
        fresh.append(candidate)
    return fresh


def replacement_targets(ranked: RankedPopulation, budget: int) -> List[int]:
    """
    Members of the last front to replace: all of it, or, when the budget is short,
    the `budget` members with the smallest crowding distance.
    """
    last = np.asarray(ranked.last_front)
    if budget >= last.size:
        return [int(i) for i in last]
    order = np.argsort(ranked.crowding[last], kind="stable")
    return sorted(int(i) for i in last[order[:budget]])


def replace_last_front(
    population: Population,
    ranked: RankedPopulation,
    new_genomes: Sequence[Genome],
    new_objectives: np.ndarray,
    targets: Optional[Sequence[int]] = None,
) -> Population:
    """
    Put new evaluated individuals in place of last-front members.

    Args:
        population: Surviving population, aligned with `ranked`.
        ranked: Fronts of `population`.
        new_genomes / new_objectives: Evaluated replacements.
        targets: Last-front indices to overwrite; defaults to the whole last front.

    Returns:
        New Population of the same size; members outside `targets` are untouched.

    Raises:
        ReplacementBypass: if the population is a single front.
    """
    if ranked.front_count < 2:
        raise ReplacementBypass("Population is a single front; replacement is bypassed.")
    targets = list(ranked.last_front) if targets is None else list(targets)
    last = set(ranked.last_front)
    if any(t not in last for t in targets):
        raise ValueError("Replacement targets must belong to the last front.")
    if len(targets) != len(new_genomes):
        raise ValueError(
            f"{len(new_genomes)} replacements for {len(targets)} last-front members."
        )

    genomes = list(population.genomes)
    objectives = population.objectives.copy()
    new_objectives = np.asarray(new_objectives, dtype=float).reshape(-1, 2)
    for slot, genome, obj in zip(targets, new_genomes, new_objectives):
        genomes[slot] = genome
        objectives[slot] = obj
    return Population(genomes, objectives)
