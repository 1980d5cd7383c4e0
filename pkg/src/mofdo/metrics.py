"""Inverted generational distance and run-level summaries.

The IGD here is the root-of-summed-squares form: for each reference point
take its Euclidean distance to the closest obtained point, then report
sqrt(sum of squared distances) / n_reference. Zero means every reference
point coincides with an obtained point. This differs by scale from the
plain-average variant some libraries use; comparisons across tools should
account for that.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist

from .problems import ReferenceFront

__all__ = ["RunSummary", "igd", "summarize"]


@dataclass(frozen=True)
class RunSummary:
    """Mean / sample std / best / worst over per-run indicator values."""

    mean: float
    std: float
    best: float
    worst: float


def igd(obtained, reference) -> float:
    """Inverted generational distance from ``reference`` to ``obtained``.

    Args:
        obtained: (m, k) array-like of objective vectors produced by a run.
        reference: :class:`ReferenceFront` or (n, k) array of true front
            points.

    Raises:
        ValueError: If either set is empty or objective counts differ.
    """
    ref = reference.points if isinstance(reference, ReferenceFront) else np.asarray(reference, dtype=float)
    obt = np.asarray(obtained, dtype=float)
    if obt.ndim == 1:
        obt = obt[None, :]
    if ref.ndim == 1:
        ref = ref[None, :]
    if obt.shape[0] == 0 or ref.shape[0] == 0:
        raise ValueError("igd needs non-empty obtained and reference sets")
    if obt.shape[1] != ref.shape[1]:
        raise ValueError("obtained and reference objective counts differ")
    d = cdist(ref, obt).min(axis=1)
    return float(np.sqrt(np.sum(d ** 2)) / ref.shape[0])


def summarize(values) -> RunSummary:
    """Aggregate per-run values; std uses the n-1 denominator (0 for n=1)."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1 or arr.shape[0] < 1:
        raise ValueError("summarize needs at least one value")
    std = float(arr.std(ddof=1)) if arr.shape[0] > 1 else 0.0
    return RunSummary(
        mean=float(arr.mean()),
        std=std,
        best=float(arr.min()),
        worst=float(arr.max()),
    )
