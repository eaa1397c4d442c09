from __future__ import annotations

"""Two-objective hypervolume against a reference point (default (1, 1)).

The non-dominated subset is sorted by f1 ascending (f2 then strictly descending)
and the dominated area is summed as vertical strips:

    HV = sum_i (f1[i+1] - f1[i]) * (ref2 - f2[i]),   f1[last+1] = ref1"""

import logging
from typing import Sequence, Tuple

import numpy as np

from featsel.core.config.constants import REFERENCE_POINT
from featsel.core.pareto.schemas import ObjectiveLike, as_objective_matrix

logger = logging.getLogger(__name__)


def hypervolume_2d(
    front: Sequence[ObjectiveLike] | np.ndarray,
    ref: Tuple[float, float] = REFERENCE_POINT,
) -> float:
    """
    Area dominated by `front` and bounded by `ref` (both objectives minimized).

    Dominated points are allowed and ignored. Points beyond the reference point in any
    objective contribute nothing; a warning is logged for them.
    """
    F = as_objective_matrix(front)
    if F.shape[0] == 0:
        return 0.0
    r1, r2 = float(ref[0]), float(ref[1])

    outside = (F[:, 0] > r1) | (F[:, 1] > r2)
    if outside.any():
        logger.warning(
            "%d point(s) beyond the reference point %s were clipped from the hypervolume.",
            int(outside.sum()),
            (r1, r2),
        )
        F = F[~outside]
    if F.shape[0] == 0:
        return 0.0

    order = np.lexsort((F[:, 1], F[:, 0]))
    area = 0.0
    best_f2 = np.inf
    kept_f1: list[float] = []
    kept_f2: list[float] = []
    for f1, f2 in F[order]:
        if f2 < best_f2:
            kept_f1.append(float(f1))
            kept_f2.append(float(f2))
            best_f2 = f2

    for i, (f1, f2) in enumerate(zip(kept_f1, kept_f2)):
        right = kept_f1[i + 1] if i + 1 < len(kept_f1) else r1
        area += (right - f1) * (r2 - f2)
    return float(area)
