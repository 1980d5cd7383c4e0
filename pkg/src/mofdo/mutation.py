"""Polynomial mutation variation operator."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .problems import ProblemSpec
from .validation import check_vector

__all__ = ["MutationParams", "polynomial_mutation"]


@dataclass(frozen=True)
class MutationParams:
    """Shape of the polynomial mutation.

    ``distribution_index`` is the positive exponent controlling how tightly
    offsets concentrate around zero; ``per_variable_rate`` is the chance of
    mutating each coordinate independently. ``None`` resolves to
    min(1, 2/dimension) at call time: at one expected flip roughly a third
    of mutants change nothing and are rejected by the archive as exact
    duplicates of their parent, which measurably starves front discovery on
    low-dimensional problems; two expected flips keep that waste small
    while staying local.
    """

    distribution_index: float = 5.0
    per_variable_rate: float | None = None

    def __post_init__(self) -> None:
        if not self.distribution_index > 0:
            raise ValueError("distribution_index must be positive")
        if self.per_variable_rate is not None and not 0.0 <= self.per_variable_rate <= 1.0:
            raise ValueError("per_variable_rate must lie in [0, 1]")

    def rate_for_dimension(self, dimension: int) -> float:
        if self.per_variable_rate is not None:
            return self.per_variable_rate
        return min(1.0, 2.0 / dimension)


def mutation_offset(v, distribution_index: float):
    """Signed unit offset for uniform draw ``v`` in [0, 1].

    Maps v < 0.5 to (2v)^(1/(q+1)) - 1 and v >= 0.5 to 1 - (2(1-v))^(1/(q+1));
    zero at v = 0.5, monotone in v, always within [-1, 1].
    """
    v = np.asarray(v, dtype=float)
    exponent = 1.0 / (distribution_index + 1.0)
    return np.where(
        v < 0.5,
        (2.0 * v) ** exponent - 1.0,
        1.0 - (2.0 * (1.0 - v)) ** exponent,
    )


def polynomial_mutation(x, problem: ProblemSpec, params: MutationParams, rng) -> np.ndarray:
    """Mutate each coordinate independently with the configured rate.

    A mutated coordinate moves by offset * max(x - lower, upper - x) and is
    then clamped into its bounds; the far-side perturbation scale means the
    raw move can overshoot, which the clamp absorbs. Draws two uniform
    arrays per call (gates, offsets) regardless of which gates fire, keeping
    the stream consumption deterministic.
    """
    xv = check_vector(x, length=problem.dimension)
    rate = params.rate_for_dimension(problem.dimension)
    gates = rng.random(problem.dimension) < rate
    v = rng.random(problem.dimension)
    alpha = mutation_offset(v, params.distribution_index)
    beta_max = np.maximum(xv - problem.lower_bounds, problem.upper_bounds - xv)
    mutated = np.where(gates, xv + alpha * beta_max, xv)
    return np.minimum(np.maximum(mutated, problem.lower_bounds), problem.upper_bounds)
