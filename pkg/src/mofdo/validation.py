"""Input validation helpers shared across the package."""

from __future__ import annotations

import numpy as np

__all__ = ["check_vector", "check_bounds", "check_in_bounds"]


def check_vector(x, length: int | None = None, name: str = "x") -> np.ndarray:
    """Coerce ``x`` to a 1-D float array, optionally enforcing its length."""
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be a 1-D vector, got shape {arr.shape}")
    if length is not None and arr.shape[0] != length:
        raise ValueError(f"{name} must have length {length}, got {arr.shape[0]}")
    return arr


def check_bounds(lower, upper) -> tuple[np.ndarray, np.ndarray]:
    """Validate per-dimension box bounds and return them as float arrays."""
    lo = check_vector(lower, name="lower_bounds")
    hi = check_vector(upper, name="upper_bounds")
    if lo.shape != hi.shape:
        raise ValueError("lower and upper bounds must have the same length")
    if not (np.isfinite(lo).all() and np.isfinite(hi).all()):
        raise ValueError("bounds must be finite")
    if np.any(lo >= hi):
        raise ValueError("each lower bound must be strictly below its upper bound")
    return lo, hi


def check_in_bounds(x: np.ndarray, lower: np.ndarray, upper: np.ndarray, name: str = "x") -> None:
    if np.any(x < lower) or np.any(x > upper):
        raise ValueError(f"{name} lies outside the problem bounds")
