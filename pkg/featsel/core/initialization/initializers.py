from __future__ import annotations

"""Population generation.

Two initializers:

bitstring_uniform -> every bit is an independent fair coin; popcounts pile up at d/2.

genuine_init      -> Uniform Covering: draw the number of True bits uniformly from
                     [min_vars, max_vars], then choose that many distinct positions
                     uniformly. Popcounts are flat over the range, and every position
                     has the same marginal probability of being selected.

Draw order (fixed, so runs are reproducible from one seed):
  bitstring_uniform: one rng.random((N, d)) block.
  genuine_init: per individual, rng.integers for the size, then rng.choice for the positions."""

from enum import Enum
from typing import List

import numpy as np
from pydantic import BaseModel, Field, model_validator

from featsel.core.genome.binary_genome import Genome
from featsel.core.utils.errors import InitSpecError


class InitMethod(str, Enum):
    BITSTRING_UNIFORM = "bitstring_uniform"
    UNIFORM_COVERING = "uniform_covering"


class InitSpec(BaseModel):
    """
    Inputs of one initialization call.

    min_vars / max_vars only matter for Uniform Covering.
    """

    population_size: int = Field(..., ge=1)
    dimension: int = Field(..., ge=1)
    min_vars: int = Field(default=1, ge=0)
    max_vars: int | None = Field(
        default=None,
        description="Upper popcount bound; defaults to the dimension.",
    )
    method: InitMethod = InitMethod.UNIFORM_COVERING

    @model_validator(mode="after")
    def _check_range(self) -> "InitSpec":
        if self.max_vars is None:
            self.max_vars = self.dimension
        if not 0 <= self.min_vars <= self.max_vars <= self.dimension:
            raise ValueError(
                f"Need 0 <= min_vars <= max_vars <= d, got "
                f"{self.min_vars}, {self.max_vars}, {self.dimension}."
            )
        return self


def bitstring_uniform(N: int, d: int, rng: np.random.Generator) -> List[Genome]:
    """
    Bit-string Uniform initialization: each of the N*d bits is True with probability 0.5.
    """
    if N < 1 or d < 1:
        raise InitSpecError(f"Need N >= 1 and d >= 1, got N={N}, d={d}.")
    block = rng.random((N, d)) < 0.5
    return [Genome.from_bits(row) for row in block]


def genuine_init(
    N: int,
    d: int,
    min_vars: int,
    max_vars: int,
    rng: np.random.Generator,
) -> List[Genome]:
    """
    Uniform Covering ("genuine") initialization.

    Args:
        N: Number of individuals.
        d: Genome length.
        min_vars: Smallest allowed popcount (>= 1, empty subsets are never produced).
        max_vars: Largest allowed popcount (<= d).
        rng: Run random stream.

    Returns:
        N genomes with popcounts in [min_vars, max_vars].

    Raises:
        InitSpecError: if the range is empty or outside [1, d].
    """
    if N < 1 or d < 1:
        raise InitSpecError(f"Need N >= 1 and d >= 1, got N={N}, d={d}.")
    if min_vars > max_vars:
        raise InitSpecError(f"min_vars ({min_vars}) > max_vars ({max_vars}).")
    if max_vars > d:
        raise InitSpecError(f"max_vars ({max_vars}) > d ({d}).")
    if min_vars < 1:
        raise InitSpecError("min_vars must be >= 1; empty feature subsets are not generated.")

    population: List[Genome] = []
    for _ in range(N):
        number_of_trues = int(rng.integers(min_vars, max_vars + 1))
        true_indices = rng.choice(d, size=number_of_trues, replace=False)
        population.append(Genome.from_indices(true_indices, d))
    return population


def initialize(spec: InitSpec, rng: np.random.Generator) -> List[Genome]:
    """
    Dispatch on spec.method. Uniform Covering clamps min_vars to at least 1.
    """
    if spec.method == InitMethod.BITSTRING_UNIFORM:
        return bitstring_uniform(spec.population_size, spec.dimension, rng)
    return genuine_init(
        spec.population_size,
        spec.dimension,
        max(1, spec.min_vars),
        int(spec.max_vars),
        rng,
    )
