"""Pareto dominance relations and non-dominated filtering.

All objectives follow the minimization convention. Constraint handling is
feasibility-first: a feasible solution beats any infeasible one, two
infeasible solutions are ordered by total violation, and two feasible
solutions are compared by plain Pareto dominance on their objectives.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

__all__ = [
    "EvaluatedSolution",
    "dominates",
    "constrained_dominates",
    "nondominated_filter",
    "nondominated_mask",
]


@dataclass(frozen=True, eq=False)
class EvaluatedSolution:
    """A decision vector together with its evaluated objectives.

    Attributes:
        position: Decision vector, shape (dimension,).
        objectives: Objective values to minimize, shape (n_objectives,).
        violation: Total constraint violation; 0.0 means feasible.
    """

    position: np.ndarray
    objectives: np.ndarray
    violation: float = 0.0

    @property
    def is_feasible(self) -> bool:
        return self.violation == 0.0

    @functools.cached_property
    def objective_sum(self) -> float:
        return float(np.sum(self.objectives))


def dominates(a, b) -> bool:
    """Return True iff objective vector ``a`` Pareto-dominates ``b``.

    ``a`` dominates ``b`` when a_i <= b_i for every objective and a_j < b_j
    for at least one. Equal vectors do not dominate each other.

    Raises:
        ValueError: If the vectors differ in length or contain non-finite
            entries.
    """
    av = np.asarray(a, dtype=float)
    bv = np.asarray(b, dtype=float)
    if av.shape != bv.shape:
        raise ValueError(f"objective vectors differ in length: {av.shape} vs {bv.shape}")
    if not (np.isfinite(av).all() and np.isfinite(bv).all()):
        raise ValueError("objective vectors must contain only finite values")
    return bool(np.all(av <= bv) and np.any(av < bv))


def constrained_dominates(a: EvaluatedSolution, b: EvaluatedSolution) -> bool:
    """Feasibility-first dominance between two evaluated solutions."""
    if a.violation == 0.0:
        if b.violation > 0.0:
            return True
        return dominates(a.objectives, b.objectives)
    if b.violation == 0.0:
        return False
    return a.violation < b.violation


def nondominated_mask(objectives, violations=None) -> np.ndarray:
    """Boolean mask of rows not constrained-dominated by any other row.

    Args:
        objectives: Array of shape (n, n_objectives).
        violations: Optional array of shape (n,) with total constraint
            violations; omit for unconstrained sets.

    Returns:
        Boolean array of shape (n,); True marks survivors. Duplicate
        objective vectors survive together.
    """
    F = np.asarray(objectives, dtype=float)
    if F.ndim != 2:
        raise ValueError(f"objectives must be 2-D, got shape {F.shape}")
    n = F.shape[0]
    if n == 0:
        return np.zeros(0, dtype=bool)
    if violations is not None:
        v = np.asarray(violations, dtype=float)
        if v.shape != (n,):
            raise ValueError("violations must have one entry per solution")
        feasible = v == 0.0
        if feasible.any():
            mask = np.zeros(n, dtype=bool)
            idx = np.flatnonzero(feasible)
            mask[idx] = _pareto_mask(F[idx])
            return mask
        return v == v.min()
    return _pareto_mask(F)


def nondominated_filter(solutions: Iterable[EvaluatedSolution]) -> list[EvaluatedSolution]:
    """Keep exactly the members not constrained-dominated by any other member.

    Input order is preserved among survivors; an empty input yields an
    empty list rather than an error.
    """
    sols = list(solutions)
    if not sols:
        return []
    lengths = {np.asarray(s.objectives).shape for s in sols}
    if len(lengths) != 1:
        raise ValueError("solutions must share a common objective count")
    F = np.array([s.objectives for s in sols], dtype=float)
    v = np.array([s.violation for s in sols], dtype=float)
    mask = nondominated_mask(F, v)
    return [s for s, keep in zip(sols, mask) if keep]


def _pareto_mask(F: np.ndarray) -> np.ndarray:
    if F.shape[1] == 2:
        return _pareto_mask_2d(F)
    return _pareto_mask_pairwise(F)


def _pareto_mask_2d(F: np.ndarray) -> np.ndarray:
    # Sort by (f1, f2); a point survives iff it has the least f2 within its
    # f1-group and no point with strictly smaller f1 has f2 <= its own.
    n = F.shape[0]
    order = np.lexsort((F[:, 1], F[:, 0]))
    f1 = F[order, 0]
    f2 = F[order, 1]
    starts = np.empty(n, dtype=bool)
    starts[0] = True
    starts[1:] = f1[1:] != f1[:-1]
    group = np.cumsum(starts) - 1
    group_min = f2[np.flatnonzero(starts)]
    best_before = np.concatenate(([np.inf], np.minimum.accumulate(group_min)[:-1]))
    dominated = (f2 > group_min[group]) | (best_before[group] <= f2)
    mask = np.empty(n, dtype=bool)
    mask[order] = ~dominated
    return mask


def _pareto_mask_pairwise(F: np.ndarray, block: int = 256) -> np.ndarray:
    n = F.shape[0]
    dominated = np.zeros(n, dtype=bool)
    for start in range(0, n, block):
        chunk = F[start:start + block]
        le = (F[:, None, :] <= chunk[None, :, :]).all(axis=2)
        lt = (F[:, None, :] < chunk[None, :, :]).any(axis=2)
        dominated[start:start + block] = (le & lt).any(axis=0)
    return ~dominated
