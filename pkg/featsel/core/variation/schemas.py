from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from featsel.core.config.settings import settings


class VariationConfig(BaseModel):
    """
    Operator settings for offspring generation; defaults come from `settings`.

    Attributes:
        mutation_prob: Per-bit flip probability.
        crossover_prob: Probability that a mating pair is recombined; otherwise the
            children are copies of the parents (before mutation).
        tournament_size: Binary tournament.
        crossover: Single-point crossover only.
        duplicate_elimination: Drop children identical to earlier children or to
            population members.
    """

    mutation_prob: float = Field(default=settings.MUTATION_PROB, ge=0.0, le=1.0)
    crossover_prob: float = Field(default=settings.CROSSOVER_PROB, ge=0.0, le=1.0)
    tournament_size: Literal[2] = 2
    crossover: Literal["single_point"] = "single_point"
    duplicate_elimination: bool = True
