from __future__ import annotations

from typing import List, Sequence

import numpy as np

from featsel.core.genome.binary_genome import Genome


class Population:
    """
    Genomes with their train objectives, kept row-aligned.
    """

    __slots__ = ("genomes", "objectives")

    def __init__(self, genomes: Sequence[Genome], objectives: np.ndarray) -> None:
        objectives = np.asarray(objectives, dtype=float).reshape(-1, 2)
        if len(genomes) != objectives.shape[0]:
            raise ValueError("genomes and objectives must have the same length.")
        self.genomes: List[Genome] = list(genomes)
        self.objectives: np.ndarray = objectives

    def __len__(self) -> int:
        return len(self.genomes)

    def merge(self, other: "Population") -> "Population":
        return Population(
            self.genomes + other.genomes,
            np.vstack([self.objectives, other.objectives]),
        )

    def subset(self, indices: Sequence[int]) -> "Population":
        idx = list(indices)
        return Population([self.genomes[i] for i in idx], self.objectives[idx])

    def objective_tuples(self) -> List[tuple[float, float]]:
        return [(float(a), float(b)) for a, b in self.objectives]
