"""
Optimizer engine: the NSGA-II generation loop with Uniform Covering
initialization and last-front replacement, plus its two ablation baselines.
"""

from featsel.core.optimizer.schemas import (
    GenerationRecord,
    OptimizerConfig,
    RunResult,
    Variant,
)
from featsel.core.optimizer.population import Population
from featsel.core.optimizer.replacement import (
    generate_replacements,
    replace_last_front,
    replacement_targets,
    size_window,
)
from featsel.core.optimizer.diverse_nsga2 import DiverseNSGA2, run

__all__ = [
    "GenerationRecord",
    "OptimizerConfig",
    "RunResult",
    "Variant",
    "Population",
    "generate_replacements",
    "replace_last_front",
    "replacement_targets",
    "size_window",
    "DiverseNSGA2",
    "run",
]
