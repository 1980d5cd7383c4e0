"""Nonparametric significance tests over algorithm result samples."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import gammaincc, ndtr
from scipy.stats import rankdata

__all__ = ["RankTable", "friedman", "wilcoxon_rank_sum"]


@dataclass(frozen=True)
class RankTable:
    """Per-benchmark ranks of k algorithms: one row per test function.

    Each row must hold distinct integer ranks drawn from 1..k (ties are not
    supported). Column totals feed the Friedman statistic.
    """

    ranks: np.ndarray

    def __post_init__(self) -> None:
        r = np.asarray(self.ranks)
        if r.ndim != 2:
            raise ValueError("ranks must be a 2-D matrix")
        if not np.issubdtype(r.dtype, np.integer):
            if not np.all(r == np.floor(r)):
                raise ValueError("ranks must be integers")
            r = r.astype(int)
        k = r.shape[1]
        if np.any(r < 1) or np.any(r > k):
            raise ValueError("ranks must lie in 1..k")
        for row in r:
            if len(set(row.tolist())) != k:
                raise ValueError("each row must rank the algorithms without ties")
        object.__setattr__(self, "ranks", r)

    @property
    def n_problems(self) -> int:
        return self.ranks.shape[0]

    @property
    def n_algorithms(self) -> int:
        return self.ranks.shape[1]

    @property
    def column_totals(self) -> np.ndarray:
        return self.ranks.sum(axis=0)


def friedman(table: RankTable) -> tuple[float, float]:
    """Friedman rank test over a completed rank table.

    Returns (chi_square, p_value) where chi_square is
    12/(n*k*(k+1)) * sum(R^2) - 3*n*(k+1) over the column totals R, and the
    p-value is the chi-square upper tail with k-1 degrees of freedom,
    computed through the regularized incomplete gamma function.
    """
    if not isinstance(table, RankTable):
        raise ValueError("friedman expects a RankTable")
    n = table.n_problems
    k = table.n_algorithms
    if n < 2:
        raise ValueError("friedman needs at least 2 test functions")
    if k < 3:
        raise ValueError("friedman needs at least 3 algorithms")
    totals = table.column_totals.astype(float)
    chi_square = 12.0 * float(np.sum(totals ** 2)) / (n * k * (k + 1)) - 3.0 * n * (k + 1)
    chi_square = max(chi_square, 0.0)  # guard the all-tied rounding corner
    p_value = float(gammaincc((k - 1) / 2.0, chi_square / 2.0))
    return chi_square, p_value


def wilcoxon_rank_sum(a, b) -> float:
    """Two-sided rank-sum p-value via the normal approximation.

    Uses midranks for ties, the tie-corrected variance, and a 0.5 continuity
    correction. Two samples whose pooled values are all identical give
    p = 1. Each sample needs at least 3 observations.
    """
    av = np.asarray(a, dtype=float)
    bv = np.asarray(b, dtype=float)
    if av.ndim != 1 or bv.ndim != 1:
        raise ValueError("samples must be 1-D")
    n1, n2 = av.shape[0], bv.shape[0]
    if n1 < 3 or n2 < 3:
        raise ValueError("each sample needs at least 3 values")
    pooled = np.concatenate((av, bv))
    ranks = rankdata(pooled)
    w = float(ranks[:n1].sum())
    total = n1 + n2
    mean = n1 * (total + 1) / 2.0
    _, tie_counts = np.unique(pooled, return_counts=True)
    tie_term = float(np.sum(tie_counts ** 3 - tie_counts)) / (total * (total - 1))
    variance = n1 * n2 / 12.0 * ((total + 1) - tie_term)
    if variance <= 0.0:
        return 1.0
    delta = w - mean
    if delta > 0:
        delta -= 0.5
    elif delta < 0:
        delta += 0.5
    z = delta / np.sqrt(variance)
    p = 2.0 * float(ndtr(-abs(z)))
    return min(p, 1.0)
