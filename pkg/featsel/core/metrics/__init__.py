"""
Metrics: hypervolume, population diversity, accuracy extraction and statistics.
"""

from featsel.core.metrics.hypervolume import hypervolume_2d
from featsel.core.metrics.diversity import avg_pairwise_hamming
from featsel.core.metrics.accuracy import FrontSummary, max_accuracy, summarize_front
from featsel.core.metrics.statistics import (
    StatReport,
    TTestResult,
    Verdict,
    count_wtl,
    mean_ci95,
    stat_report,
    welch_t_test,
)

__all__ = [
    "hypervolume_2d",
    "avg_pairwise_hamming",
    "FrontSummary",
    "max_accuracy",
    "summarize_front",
    "StatReport",
    "TTestResult",
    "Verdict",
    "count_wtl",
    "mean_ci95",
    "stat_report",
    "welch_t_test",
]
