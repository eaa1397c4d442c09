"""
Core Package - Multi-Objective Wrapper Feature Selection

This package provides a binary NSGA-II for choosing feature subsets that combines:
- Packed bit-string genomes with Uniform Covering initialization
- Fast non-dominated sorting, crowding distance and elitist survival
- k-NN wrapper objectives under an exact function-call budget
- Last-front replacement for population diversity
- Hypervolume, diversity and t-test based reporting
"""

# Re-export commonly used components for convenience
from featsel.core.genome import Genome, hamming_distance, popcount
from featsel.core.objectives import (
    Dataset,
    FitnessEvaluator,
    NFCCounter,
    SplitDataset,
    load_dataset,
    make_toy_dataset,
    split,
)
from featsel.core.optimizer import (
    DiverseNSGA2,
    GenerationRecord,
    OptimizerConfig,
    RunResult,
    Variant,
    run,
)
from featsel.core.metrics import hypervolume_2d, mean_ci95, welch_t_test
from featsel.core.experiment import ExperimentConfig, run_experiment, summarize
from featsel.core.config import settings

__all__ = [
    # Genome
    "Genome",
    "hamming_distance",
    "popcount",
    # Objectives
    "Dataset",
    "FitnessEvaluator",
    "NFCCounter",
    "SplitDataset",
    "load_dataset",
    "make_toy_dataset",
    "split",
    # Optimizer
    "DiverseNSGA2",
    "GenerationRecord",
    "OptimizerConfig",
    "RunResult",
    "Variant",
    "run",
    # Metrics
    "hypervolume_2d",
    "mean_ci95",
    "welch_t_test",
    # Experiment
    "ExperimentConfig",
    "run_experiment",
    "summarize",
    # Configuration
    "settings",
]
