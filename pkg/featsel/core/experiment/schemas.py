from __future__ import annotations

"""Experiment configuration and the aggregated report.

ExperimentConfig -> datasets x variants x seeds sweep settings
ExperimentReport -> one CellReport per (dataset, variant), verdicts against each baseline,
                    win/tie/loss tallies and the datasets that failed to load."""

from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from featsel.core.config.settings import settings
from featsel.core.metrics.statistics import StatReport, Verdict
from featsel.core.optimizer.schemas import OptimizerConfig, Variant
from featsel.core.variation.schemas import VariationConfig


class ExperimentConfig(BaseModel):
    """
    One multi-seed sweep. Run i of every variant uses seed `seed_base + i`,
    so all variants see the same train/test split for the same i.
    """

    datasets: List[str] = Field(..., min_length=1, description="Dataset CSV paths.")
    variants: List[Variant] = Field(default_factory=lambda: list(Variant))
    runs: int = Field(default=settings.RUNS, ge=1)
    seed_base: int = Field(default=settings.SEED_BASE, ge=0)
    population_size: int = Field(default=settings.POP_SIZE, ge=4)
    max_nfc: int = Field(default=settings.MAX_NFC, ge=1)
    k: int = Field(default=settings.K_NEIGHBORS, ge=1)
    test_fraction: float = Field(default=settings.TEST_FRACTION, gt=0.0, le=0.5)
    mutation_prob: float = Field(default=settings.MUTATION_PROB, ge=0.0, le=1.0)
    stratify: bool = False
    normalize: bool = False
    output_dir: str = settings.OUTPUT_DIR
    n_jobs: int = Field(default=settings.N_JOBS, ge=-1, description="joblib workers; -1 uses all cores.")

    @field_validator("variants")
    @classmethod
    def _unique_variants(cls, value: List[Variant]) -> List[Variant]:
        if not value:
            raise ValueError("At least one variant is required.")
        if len(set(value)) != len(value):
            raise ValueError("Variants must not repeat.")
        return value

    @model_validator(mode="after")
    def _check_sweep(self) -> "ExperimentConfig":
        if self.n_jobs == 0:
            raise ValueError("n_jobs must be a positive worker count or -1.")
        # surfaces population/budget errors before any run starts
        self.optimizer_config(self.variants[0], self.seed_base)
        return self

    @property
    def seeds(self) -> List[int]:
        return [self.seed_base + i for i in range(self.runs)]

    def optimizer_config(self, variant: Variant, seed: int) -> OptimizerConfig:
        return OptimizerConfig(
            population_size=self.population_size,
            max_nfc=self.max_nfc,
            variation=VariationConfig(mutation_prob=self.mutation_prob),
            variant=variant,
            seed=seed,
        )

    @staticmethod
    def dataset_name(path: str) -> str:
        return Path(path).stem


class CellReport(BaseModel):
    """
    Aggregates of one (dataset, variant) cell over its runs.

    Statistics are None ("n/a" in tables) when the cell has fewer than 2 runs.
    """

    dataset: str
    variant: Variant
    n_runs: int = Field(..., ge=0)
    hv_train: Optional[StatReport] = None
    hv_test: Optional[StatReport] = None
    max_accuracy: Optional[float] = None
    features_at_max_acc: Optional[float] = None
    ratio_at_max_acc: Optional[float] = None
    front_size: Optional[float] = None
    feature_count: Optional[StatReport] = Field(
        default=None, description="CI of front-member popcounts pooled over runs."
    )
    replaced_ratio_pct: Optional[float] = None
    verdicts: Dict[str, Dict[str, Verdict]] = Field(
        default_factory=dict, description="baseline -> metric -> verdict of this variant."
    )


class WinTieLoss(BaseModel):
    wins: int = 0
    ties: int = 0
    losses: int = 0

    def label(self) -> str:
        return f"{self.wins}/{self.ties}/{self.losses}"


class ExperimentReport(BaseModel):
    """
    Everything the summary tables show, recomputable from the persisted run files.
    """

    baselines: List[Variant]
    datasets: List[str]
    variants: List[Variant]
    cells: List[CellReport] = Field(default_factory=list)
    wtl: Dict[str, Dict[str, Dict[str, WinTieLoss]]] = Field(
        default_factory=dict, description="baseline -> variant -> metric -> tally."
    )
    failures: Dict[str, str] = Field(default_factory=dict)

    def cell(self, dataset: str, variant: Variant | str) -> Optional[CellReport]:
        variant = Variant(variant)
        for c in self.cells:
            if c.dataset == dataset and c.variant == variant:
                return c
        return None
