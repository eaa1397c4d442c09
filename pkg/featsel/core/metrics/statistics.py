from __future__ import annotations

"""Confidence intervals and two-sample t-tests behind the result tables.

Verdicts are from the point of view of sample `a` against baseline `b`:
win  -> a is significantly better
loss -> a is significantly worse
tie  -> p >= alpha"""

import math
from enum import Enum
from typing import Iterable, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field, model_validator
from scipy import stats

from featsel.core.utils.errors import StatisticsError


class Verdict(str, Enum):
    WIN = "win"
    TIE = "tie"
    LOSS = "loss"


class StatReport(BaseModel):
    """
    Mean with a 95% t-interval and, optionally, a verdict against a baseline.
    """

    mean: float
    ci95: Tuple[float, float]
    verdict: Verdict | None = None
    p_value: float | None = Field(default=None, ge=0.0, le=1.0)

    @model_validator(mode="after")
    def _check_interval(self) -> "StatReport":
        lo, hi = self.ci95
        # allow float round-off at zero width
        if not (lo <= self.mean + 1e-12 and self.mean <= hi + 1e-12):
            raise ValueError(f"Interval {self.ci95} does not contain the mean {self.mean}.")
        return self


class TTestResult(BaseModel):
    p_value: float = Field(..., ge=0.0, le=1.0)
    verdict: Verdict
    statistic: float | None = None


def mean_ci95(samples: Sequence[float]) -> Tuple[float, float, float]:
    """
    mean +/- t(0.975, n-1) * s / sqrt(n), with s the sample standard deviation.

    Returns:
        (mean, lo, hi)

    Raises:
        StatisticsError: for fewer than two samples.
    """
    x = np.asarray(samples, dtype=float)
    n = x.size
    if n < 2:
        raise StatisticsError(f"A confidence interval needs at least 2 samples, got {n}.")
    mean = float(x.mean())
    sem = float(x.std(ddof=1)) / math.sqrt(n)
    half = float(stats.t.ppf(0.975, df=n - 1)) * sem
    return mean, mean - half, mean + half


def stat_report(samples: Sequence[float]) -> StatReport:
    mean, lo, hi = mean_ci95(samples)
    return StatReport(mean=mean, ci95=(lo, hi))


def welch_t_test(
    a: Sequence[float],
    b: Sequence[float],
    alpha: float = 0.05,
    higher_is_better: bool = True,
    equal_var: bool = False,
) -> TTestResult:
    """
    Two-sided two-sample t-test (Welch by default, pooled with equal_var=True).

    Args:
        a: Candidate samples.
        b: Baseline samples.
        alpha: Significance level.
        higher_is_better: True for HV/accuracy, False for feature counts.
        equal_var: Use the pooled-variance Student test instead of Welch.

    Returns:
        TTestResult with p-value and win/tie/loss verdict for `a`.
    """
    xa = np.asarray(a, dtype=float)
    xb = np.asarray(b, dtype=float)
    if xa.size < 2 or xb.size < 2:
        raise StatisticsError("The t-test needs at least 2 samples per group.")

    mean_a, mean_b = float(xa.mean()), float(xb.mean())
    var_a, var_b = float(xa.var(ddof=1)), float(xb.var(ddof=1))

    if var_a == 0.0 and var_b == 0.0:
        if mean_a == mean_b:
            return TTestResult(p_value=1.0, verdict=Verdict.TIE)
        p_value, statistic = 0.0, math.copysign(math.inf, mean_a - mean_b)
    else:
        result = stats.ttest_ind(xa, xb, equal_var=equal_var)
        statistic = float(result.statistic)
        p_value = float(result.pvalue)
        if math.isnan(p_value):
            p_value = 1.0

    if p_value >= alpha:
        verdict = Verdict.TIE
    elif (mean_a > mean_b) == higher_is_better:
        verdict = Verdict.WIN
    else:
        verdict = Verdict.LOSS
    return TTestResult(p_value=min(max(p_value, 0.0), 1.0), verdict=verdict, statistic=statistic)


def count_wtl(verdicts: Iterable[Verdict | None]) -> Tuple[int, int, int]:
    """Tally (wins, ties, losses), ignoring missing verdicts."""
    wins = ties = losses = 0
    for v in verdicts:
        if v == Verdict.WIN:
            wins += 1
        elif v == Verdict.TIE:
            ties += 1
        elif v == Verdict.LOSS:
            losses += 1
    return wins, ties, losses
