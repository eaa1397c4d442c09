from __future__ import annotations

"""Optimizer configuration and run records.

Variant table:
  nsga2              -> Bit-string Uniform init, no replacement
  nsga2_genuine      -> Uniform Covering init,   no replacement
  diverse_nsga2      -> Uniform Covering init,   last-front replacement
  nsga2_replacement  -> Bit-string Uniform init, last-front replacement"""

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from featsel.core.config.constants import VARIANT_TABLE
from featsel.core.config.settings import settings
from featsel.core.genome.binary_genome import Genome
from featsel.core.initialization.initializers import InitMethod
from featsel.core.variation.schemas import VariationConfig


class Variant(str, Enum):
    NSGA2 = "nsga2"
    NSGA2_GENUINE = "nsga2_genuine"
    DIVERSE_NSGA2 = "diverse_nsga2"
    NSGA2_REPLACEMENT = "nsga2_replacement"


class OptimizerConfig(BaseModel):
    """
    Settings of one optimizer run; defaults come from `settings`.
    """

    population_size: int = Field(default=settings.POP_SIZE, ge=4)
    max_nfc: int = Field(default=settings.MAX_NFC, ge=1)
    variation: VariationConfig = Field(default_factory=VariationConfig)
    variant: Variant = Variant.DIVERSE_NSGA2
    seed: int = Field(default=0, ge=0)
    replacement_attempts: int = Field(
        default=settings.REPLACEMENT_ATTEMPTS,
        ge=1,
        description="Resampling attempts for a replacement that duplicates a population member.",
    )
    max_stalled_generations: int = Field(
        default=settings.MAX_STALLED_GENERATIONS,
        ge=1,
        description="Stop after this many consecutive generations without a new child.",
    )

    @model_validator(mode="after")
    def _check_sizes(self) -> "OptimizerConfig":
        if self.population_size % 2:
            raise ValueError(f"population_size must be even, got {self.population_size}.")
        if self.max_nfc < self.population_size:
            raise ValueError(
                f"max_nfc ({self.max_nfc}) is smaller than the initial population "
                f"({self.population_size})."
            )
        return self

    @property
    def init_method(self) -> InitMethod:
        return InitMethod(VARIANT_TABLE[self.variant.value][0])

    @property
    def replacement_enabled(self) -> bool:
        return VARIANT_TABLE[self.variant.value][1]


class GenerationRecord(BaseModel):
    """
    One line of run history. Generation 0 is the evaluated initial population.

    Attributes:
        generation: Generation index.
        nfc_consumed: Function calls used so far.
        hv_train: Hypervolume of the population's first front (train objectives).
        avg_pairwise_hamming: Mean pairwise Hamming distance of the population.
        last_front_size: Size N' of the last front after survival, before any replacement.
        replaced_count: Individuals replaced this generation (0 when bypassed).
        front_count: Number of fronts after survival.
        children_evaluated: Children that survived duplicate elimination and were evaluated.
        window: (alpha, beta) popcount window of the replacement, if it fired.
    """

    generation: int = Field(..., ge=0)
    nfc_consumed: int = Field(..., ge=0)
    hv_train: float = Field(..., ge=0.0, le=1.0)
    avg_pairwise_hamming: float = Field(..., ge=0.0)
    last_front_size: int = Field(..., ge=0)
    replaced_count: int = Field(default=0, ge=0)
    front_count: int = Field(..., ge=1)
    children_evaluated: int = Field(default=0, ge=0)
    window: Optional[Tuple[int, int]] = None


class RunResult(BaseModel):
    """
    Everything one run produces.

    Objectives are stored as (error, ratio) tuples so results compare exactly.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    variant: Variant
    seed: int
    dimension: int
    population_size: int
    max_nfc: int
    population: List[Genome]
    population_objectives: List[Tuple[float, float]]
    population_ranks: List[int]
    front: List[Genome]
    front_train: List[Tuple[float, float]]
    front_test: List[Tuple[float, float]]
    history: List[GenerationRecord]
    total_nfc: int
    stopped_early: bool = False
