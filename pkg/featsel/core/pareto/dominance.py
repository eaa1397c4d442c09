from __future__ import annotations

from typing import Sequence

import numpy as np

from featsel.core.pareto.schemas import ObjectiveLike, ObjectiveVector, as_objective_matrix


def _vec(v: ObjectiveLike) -> np.ndarray:
    if isinstance(v, ObjectiveVector):
        return np.asarray(v.as_tuple(), dtype=float)
    return np.asarray(v, dtype=float)


def dominates(a: ObjectiveLike, b: ObjectiveLike) -> bool:
    """
    True iff a is no worse than b in every objective and strictly better in one (minimization).
    """
    va, vb = _vec(a), _vec(b)
    return bool(np.all(va <= vb) and np.any(va < vb))


def domination_matrix(objs: Sequence[ObjectiveLike] | np.ndarray) -> np.ndarray:
    """
    Boolean (n, n) matrix whose [i, j] entry is True iff row i dominates row j.
    """
    F = as_objective_matrix(objs)
    le = np.all(F[:, None, :] <= F[None, :, :], axis=2)
    lt = np.any(F[:, None, :] < F[None, :, :], axis=2)
    return le & lt
