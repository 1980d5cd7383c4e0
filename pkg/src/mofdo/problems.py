"""Benchmark problems and reference Pareto fronts.

Three families are registered:

- ``zdt1`` .. ``zdt5``: the classical bi-objective ZDT suite. Note that the
  ``zdt5`` registered here is the real-coded exponential/sine variant (the
  function most libraries ship under the name ZDT6); the name is kept for
  compatibility with the benchmark table this suite mirrors.
- ``mmf1`` .. ``mmf12``: multi-modal bi-objective functions where several
  disjoint Pareto sets map onto the same front. ``mmf1``/``mmf5``/``mmf6``/
  ``mmf7`` take the absolute value of (x1 - 2) inside roots and sine terms,
  without which the functions are undefined on half their stated domain;
  ``mmf4`` likewise uses |x1|, without which its front degenerates to a
  single point. ``mmf2``/``mmf3`` keep their published branch conditions
  verbatim even though those look inconsistent; treat them as qualitative
  tests only.
- ``welded_beam``: bi-objective constrained design problem over
  (h, l, t, b) = weld thickness, weld length, beam height, beam width,
  minimizing fabrication cost and end deflection under four stress,
  geometry, and buckling constraints.

Every problem evaluates vectorized batches; reference fronts are generated
analytically where a closed-form front exists (ZDT) and by dense-grid
enumeration plus non-dominated filtering otherwise (MMF, welded beam).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.optimize import minimize_scalar

from .dominance import EvaluatedSolution, nondominated_mask
from .validation import check_bounds, check_in_bounds, check_vector

__all__ = [
    "ProblemSpec",
    "ReferenceFront",
    "evaluate",
    "evaluate_batch",
    "clamp_to_bounds",
    "reference_front",
    "get_problem",
    "available_problems",
]

# (objectives, violations) for a batch of row vectors
BatchEvaluator = Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]


@dataclass
class ProblemSpec:
    """Static description of an optimization problem.

    Attributes:
        name: Registry identifier, e.g. ``"zdt1"``.
        dimension: Number of decision variables.
        lower_bounds / upper_bounds: Per-variable box bounds.
        objective_count: Number of objectives (all minimized), >= 2.
        has_constraints: Whether evaluation can report a nonzero violation.
        tunables: Named shape parameters (e.g. ``n_p``, ``q`` for the
            multi-modal family, ``yield_limit`` for the welded beam).
    """

    name: str
    dimension: int
    lower_bounds: np.ndarray
    upper_bounds: np.ndarray
    objective_count: int
    has_constraints: bool = False
    tunables: dict[str, float] = field(default_factory=dict)
    _batch: BatchEvaluator | None = field(default=None, repr=False, compare=False)
    _analytic_front: Callable[[int], np.ndarray] | None = field(
        default=None, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        lo, hi = check_bounds(self.lower_bounds, self.upper_bounds)
        if lo.shape[0] != self.dimension:
            raise ValueError("bounds length must equal the problem dimension")
        if self.dimension < 1:
            raise ValueError("dimension must be >= 1")
        if self.objective_count < 2:
            raise ValueError("objective_count must be >= 2")
        self.lower_bounds = lo
        self.upper_bounds = hi


@dataclass(frozen=True)
class ReferenceFront:
    """A sampled true Pareto front used as the IGD reference set.

    ``source`` records how the points were obtained: ``"analytic"`` for
    closed-form fronts, ``"oracle-grid"`` for dense-grid enumeration.
    """

    points: np.ndarray
    source: str

    def __post_init__(self) -> None:
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2 or pts.shape[0] < 100:
            raise ValueError("a reference front needs at least 100 points")
        if self.source not in ("analytic", "oracle-grid"):
            raise ValueError(f"unknown reference front source: {self.source!r}")
        if not bool(nondominated_mask(pts).all()):
            raise ValueError("reference front points must be mutually non-dominated")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return self.points.shape[0]


def evaluate(problem: ProblemSpec, x, validate: bool = True) -> EvaluatedSolution:
    """Evaluate one in-bounds decision vector.

    With ``validate=False`` the input is trusted to be an in-bounds float
    vector the caller will not mutate (the optimizer's inner loop feeds
    freshly clamped arrays); the returned solution then aliases it.

    Raises:
        ValueError: On dimension mismatch or out-of-bounds input; callers
            are expected to clamp first.
    """
    if validate:
        xv = check_vector(x, length=problem.dimension)
        check_in_bounds(xv, problem.lower_bounds, problem.upper_bounds)
        xv = xv.copy()
    else:
        xv = x
    F, V = problem._batch(xv[None, :])
    return EvaluatedSolution(position=xv, objectives=F[0], violation=float(V[0]))


def evaluate_batch(problem: ProblemSpec, X) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate a (m, dimension) batch; returns (objectives, violations).

    Bounds are not re-checked here; clamp rows before calling.
    """
    Xa = np.asarray(X, dtype=float)
    if Xa.ndim != 2 or Xa.shape[1] != problem.dimension:
        raise ValueError(f"batch must have shape (m, {problem.dimension})")
    return problem._batch(Xa)


def clamp_to_bounds(problem: ProblemSpec, x) -> np.ndarray:
    """Clip each coordinate into the problem's box bounds."""
    xv = check_vector(x, length=problem.dimension)
    return np.minimum(np.maximum(xv, problem.lower_bounds), problem.upper_bounds)


# ---------------------------------------------------------------------------
# Reference front generation
# ---------------------------------------------------------------------------

def reference_front(problem: ProblemSpec, n_points: int = 1000) -> ReferenceFront:
    """Sample the problem's true Pareto front.

    ZDT fronts are generated from their closed-form f2(f1) relation and then
    non-dominated filtered (needed for the disconnected ZDT3 front). All
    other problems are enumerated on a dense uniform decision-space grid,
    filtered, and thinned to ``n_points`` by farthest-point selection in
    objective space. Deterministic for fixed inputs.
    """
    if n_points < 100:
        raise ValueError("n_points must be >= 100")
    if problem._analytic_front is not None:
        pts = problem._analytic_front(n_points)
        return ReferenceFront(points=pts, source="analytic")
    pts = _oracle_grid_points(problem, n_points)
    return ReferenceFront(points=pts, source="oracle-grid")


def _curve_front(f1_lo: float, f1_hi: float, curve, n_points: int) -> np.ndarray:
    m = max(4 * n_points, 4000)
    f1 = np.linspace(f1_lo, f1_hi, m)
    pts = np.column_stack((f1, curve(f1)))
    pts = pts[nondominated_mask(pts)]
    return _farthest_point_subset(pts, n_points)


def _oracle_grid_points(problem: ProblemSpec, n_points: int,
                        budget: int = 2_000_000) -> np.ndarray:
    d = problem.dimension
    per_dim = 1000 if d == 2 else max(2, int(round(budget ** (1.0 / d))))
    axes = [
        np.linspace(problem.lower_bounds[i], problem.upper_bounds[i], per_dim)
        for i in range(d)
    ]
    mesh = np.meshgrid(*axes, indexing="ij")
    X = np.stack([m.reshape(-1) for m in mesh], axis=1)
    F, V = problem._batch(X)
    violations = V if problem.has_constraints else None
    keep = nondominated_mask(F, violations)
    X, F = X[keep], F[keep]

    # A coarse grid in higher dimensions yields few non-dominated points;
    # refine locally around the survivors, halving the spacing per round,
    # until the front is sampled densely enough to thin back down.
    spacing = (problem.upper_bounds - problem.lower_bounds) / (per_dim - 1)
    offsets = np.stack(
        [m.reshape(-1) for m in np.meshgrid(*([np.array([-1.0, 0.0, 1.0])] * d),
                                            indexing="ij")],
        axis=1,
    )
    rounds = 0
    while F.shape[0] < n_points and rounds < 8:
        spacing = spacing / 2.0
        cand = (X[:, None, :] + offsets[None, :, :] * spacing).reshape(-1, d)
        np.clip(cand, problem.lower_bounds, problem.upper_bounds, out=cand)
        cand = np.unique(cand, axis=0)
        Fc, Vc = problem._batch(cand)
        keep = nondominated_mask(Fc, Vc if problem.has_constraints else None)
        X, F = cand[keep], Fc[keep]
        rounds += 1
    return _farthest_point_subset(F, n_points)


def _farthest_point_subset(points: np.ndarray, n: int) -> np.ndarray:
    """Greedy farthest-point thinning; deterministic (first-index ties)."""
    if points.shape[0] <= n:
        return points
    selected = np.empty(n, dtype=np.intp)
    selected[0] = int(np.argmin(points[:, 0]))
    dist = np.linalg.norm(points - points[selected[0]], axis=1)
    for i in range(1, n):
        selected[i] = int(np.argmax(dist))
        dist = np.minimum(dist, np.linalg.norm(points - points[selected[i]], axis=1))
    return points[np.sort(selected)]


# ---------------------------------------------------------------------------
# ZDT family
# ---------------------------------------------------------------------------


def _pack(f1: np.ndarray, f2: np.ndarray) -> np.ndarray:
    out = np.empty((f1.shape[0], 2))
    out[:, 0] = f1
    out[:, 1] = f2
    return out


def _zdt_g(X: np.ndarray) -> np.ndarray:
    return 1.0 + 9.0 * X[:, 1:].sum(axis=1) / (X.shape[1] - 1)


def _zdt1_batch(X):
    f1 = X[:, 0]
    g = _zdt_g(X)
    f2 = g * (1.0 - np.sqrt(f1 / g))
    return _pack(f1, f2), np.zeros(X.shape[0])


def _zdt2_batch(X):
    f1 = X[:, 0]
    g = _zdt_g(X)
    f2 = g * (1.0 - (f1 / g) ** 2)
    return _pack(f1, f2), np.zeros(X.shape[0])


def _zdt3_batch(X):
    f1 = X[:, 0]
    g = _zdt_g(X)
    f2 = g * (1.0 - np.sqrt(f1 / g) - f1 / g * np.sin(10.0 * np.pi * f1))
    return _pack(f1, f2), np.zeros(X.shape[0])


def _zdt4_batch(X):
    # g = 1 + 10(n-1) + sum(x_i^2 - 10 cos(4 pi x_i)); equals the familiar
    # 91 + sum(...) form at the default n = 10.
    n = X.shape[1]
    f1 = X[:, 0]
    tail = X[:, 1:]
    g = 1.0 + 10.0 * (n - 1) + (tail ** 2 - 10.0 * np.cos(4.0 * np.pi * tail)).sum(axis=1)
    f2 = g * (1.0 - np.sqrt(f1 / g))
    return _pack(f1, f2), np.zeros(X.shape[0])


def _zdt5_batch(X):
    n = X.shape[1]
    f1 = 1.0 - np.exp(-4.0 * X[:, 0]) * np.sin(6.0 * np.pi * X[:, 0]) ** 6
    g = 1.0 + 9.0 * (X[:, 1:].sum(axis=1) / (n - 1)) ** 0.25
    f2 = g * (1.0 - (f1 / g) ** 2)
    return _pack(f1, f2), np.zeros(X.shape[0])


@functools.lru_cache(maxsize=1)
def _zdt5_f1_min() -> float:
    """Minimum of f1(x1) = 1 - exp(-4 x1) sin^6(6 pi x1) over [0, 1]."""
    xs = np.linspace(0.0, 1.0, 100_001)
    vals = 1.0 - np.exp(-4.0 * xs) * np.sin(6.0 * np.pi * xs) ** 6
    i = int(np.argmin(vals))
    lo = xs[max(i - 1, 0)]
    hi = xs[min(i + 1, xs.shape[0] - 1)]
    res = minimize_scalar(
        lambda x: 1.0 - math.exp(-4.0 * x) * math.sin(6.0 * math.pi * x) ** 6,
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-14},
    )
    return float(res.fun)


def zdt1(dimension: int = 30) -> ProblemSpec:
    return _zdt_spec("zdt1", dimension, _zdt1_batch, lambda f1: 1.0 - np.sqrt(f1))


def zdt2(dimension: int = 30) -> ProblemSpec:
    return _zdt_spec("zdt2", dimension, _zdt2_batch, lambda f1: 1.0 - f1 ** 2)


def zdt3(dimension: int = 30) -> ProblemSpec:
    return _zdt_spec(
        "zdt3", dimension, _zdt3_batch,
        lambda f1: 1.0 - np.sqrt(f1) - f1 * np.sin(10.0 * np.pi * f1),
    )


def zdt4(dimension: int = 10) -> ProblemSpec:
    if dimension < 2:
        raise ValueError("zdt4 needs dimension >= 2")
    lo = np.full(dimension, -5.0)
    hi = np.full(dimension, 5.0)
    lo[0], hi[0] = 0.0, 1.0
    return ProblemSpec(
        name="zdt4",
        dimension=dimension,
        lower_bounds=lo,
        upper_bounds=hi,
        objective_count=2,
        _batch=_zdt4_batch,
        _analytic_front=lambda n: _curve_front(0.0, 1.0, lambda f1: 1.0 - np.sqrt(f1), n),
    )


def zdt5(dimension: int = 10) -> ProblemSpec:
    """Real-coded exponential/sine ZDT variant (elsewhere named ZDT6)."""
    if dimension < 2:
        raise ValueError("zdt5 needs dimension >= 2")
    return ProblemSpec(
        name="zdt5",
        dimension=dimension,
        lower_bounds=np.zeros(dimension),
        upper_bounds=np.ones(dimension),
        objective_count=2,
        _batch=_zdt5_batch,
        _analytic_front=lambda n: _curve_front(
            _zdt5_f1_min(), 1.0, lambda f1: 1.0 - f1 ** 2, n
        ),
    )


def _zdt_spec(name, dimension, batch, front_curve) -> ProblemSpec:
    if dimension < 2:
        raise ValueError(f"{name} needs dimension >= 2")
    return ProblemSpec(
        name=name,
        dimension=dimension,
        lower_bounds=np.zeros(dimension),
        upper_bounds=np.ones(dimension),
        objective_count=2,
        _batch=batch,
        _analytic_front=lambda n: _curve_front(0.0, 1.0, front_curve, n),
    )


# ---------------------------------------------------------------------------
# Multi-modal multi-objective (MMF) family, all 2-D / 2 objectives
# ---------------------------------------------------------------------------

def _mmf1_batch(X):
    a = np.abs(X[:, 0] - 2.0)
    f1 = a
    f2 = 1.0 - np.sqrt(a) + 2.0 * (X[:, 1] - np.sin(6.0 * np.pi * a + np.pi)) ** 2
    return _pack(f1, f2), np.zeros(X.shape[0])


def _mmf2_batch(X):
    x1, x2 = X[:, 0], X[:, 1]
    s = np.sqrt(x1)
    y1 = x2 - s
    y2 = x2 - 1.0 - s
    lower = 1.0 - s + 2.0 * (4.0 * y1 ** 2 - 2.0 * np.cos(20.0 * y1 * np.pi / np.sqrt(2.0)) + 2.0)
    upper = 1.0 - s + 2.0 * (4.0 * y2 ** 2 - np.cos(20.0 * y2 * np.pi / np.sqrt(2.0)) + 2.0)
    f2 = np.where(x2 <= 1.0, lower, upper)
    return _pack(x1, f2), np.zeros(X.shape[0])


def _mmf3_batch(X):
    x1, x2 = X[:, 0], X[:, 1]
    s = np.sqrt(x1)
    y1 = x2 - s
    y2 = x2 - 0.5 - s
    branch_a = 1.0 - s + 2.0 * (4.0 * y1 ** 2 - 2.0 * np.cos(20.0 * y1 * np.pi / np.sqrt(2.0)) + 2.0)
    branch_b = 1.0 - s + 2.0 * (4.0 * y2 ** 2 - np.cos(20.0 * y2 * np.pi / np.sqrt(2.0)) + 2.0)
    # Published branch conditions leave x1 == 0.25 with 0.5 < x2 < 1
    # unassigned; the first branch applies so evaluation stays defined.
    use_b = (x2 >= 1.0) | ((x2 > 0.5) & (x2 < 1.0) & (x1 < 0.25))
    f2 = np.where(use_b, branch_b, branch_a)
    return _pack(x1, f2), np.zeros(X.shape[0])


def _mmf4_batch(X):
    # |x1| keeps both signs of x1 on the front; the raw coordinate would
    # collapse the whole front to the single point at x1 = -1
    a = np.abs(X[:, 0])
    x2 = X[:, 1]
    s = np.sin(np.pi * a)
    f2 = np.where(
        x2 < 1.0,
        1.0 - a ** 2 + 2.0 * (x2 - s) ** 2,
        1.0 - a ** 2 + 2.0 * (x2 - 1.0 - s) ** 2,
    )
    return _pack(a, f2), np.zeros(X.shape[0])


def _mmf5_batch(X):
    a = np.abs(X[:, 0] - 2.0)
    x2 = X[:, 1]
    s = np.sin(6.0 * np.pi * a + np.pi)
    f2 = np.where(
        x2 <= 1.0,
        1.0 - np.sqrt(a) + 2.0 * (x2 - s) ** 2,
        1.0 - np.sqrt(a) + 2.0 * (x2 - 2.0 - s) ** 2,
    )
    return _pack(a, f2), np.zeros(X.shape[0])


def _mmf6_batch(X):
    a = np.abs(X[:, 0] - 2.0)
    x2 = X[:, 1]
    s = np.sin(6.0 * np.pi * a + np.pi)
    f2 = np.where(
        x2 <= 1.0,
        1.0 - np.sqrt(a) + 2.0 * (x2 - s) ** 2,
        1.0 - np.sqrt(a) + 2.0 * (x2 - 1.0 - s) ** 2,
    )
    return _pack(a, f2), np.zeros(X.shape[0])


def _mmf7_batch(X):
    a = np.abs(X[:, 0] - 2.0)
    x2 = X[:, 1]
    amp = 0.3 * a ** 2 * np.cos(24.0 * np.pi * a + 4.0 * np.pi) + 0.6 * a
    f2 = 1.0 - np.sqrt(a) + (x2 - amp * np.sin(6.0 * np.pi * a + np.pi)) ** 2
    return _pack(a, f2), np.zeros(X.shape[0])


def _mmf8_batch(X):
    x1, x2 = X[:, 0], X[:, 1]
    s = np.sin(x1)
    # 1 - sin^2 can dip a hair below zero in floating point
    root = np.sqrt(np.maximum(1.0 - s ** 2, 0.0))
    f2 = np.where(
        x2 <= 4.0,
        root + 2.0 * (x2 - s - x1) ** 2,
        root + 2.0 * (x2 - 4.0 - s - x1) ** 2,
    )
    return _pack(s, f2), np.zeros(X.shape[0])


def _mmf9_batch(X, n_p):
    x1, x2 = X[:, 0], X[:, 1]
    g = 2.0 - np.sin(n_p * np.pi * x2) ** 6
    return _pack(x1, g / x1), np.zeros(X.shape[0])


def _mmf10_batch(X):
    x1, x2 = X[:, 0], X[:, 1]
    g = (
        2.0
        - np.exp(-(((x2 - 0.2) / 0.004) ** 2))
        - 0.8 * np.exp(-(((x2 - 0.6) / 0.4) ** 2))
    )
    return _pack(x1, g / x1), np.zeros(X.shape[0])


def _mmf11_g(x, n_p):
    return 2.0 - np.exp(-2.0 * np.log(2.0) * ((x - 0.1) / 0.8) ** 2) * np.sin(n_p * np.pi * x) ** 6


def _mmf11_batch(X, n_p):
    x1, x2 = X[:, 0], X[:, 1]
    g = _mmf11_g(x2, n_p)
    return _pack(x1, g / x1), np.zeros(X.shape[0])


def _mmf12_batch(X, n_p, q):
    x1, x2 = X[:, 0], X[:, 1]
    f1 = x1
    g = _mmf11_g(x2, n_p)
    h = 1.0 - (f1 / g) ** 2 - (f1 / g) * np.sin(2.0 * np.pi * q * f1)
    return _pack(f1, g * h), np.zeros(X.shape[0])


def _mmf_spec(name, lower, upper, batch, tunables=None) -> ProblemSpec:
    return ProblemSpec(
        name=name,
        dimension=2,
        lower_bounds=np.asarray(lower, dtype=float),
        upper_bounds=np.asarray(upper, dtype=float),
        objective_count=2,
        tunables=dict(tunables or {}),
        _batch=batch,
    )


def mmf1() -> ProblemSpec:
    return _mmf_spec("mmf1", [1.0, -1.0], [3.0, 1.0], _mmf1_batch)


def mmf2() -> ProblemSpec:
    return _mmf_spec("mmf2", [0.0, 0.0], [1.0, 2.0], _mmf2_batch)


def mmf3() -> ProblemSpec:
    return _mmf_spec("mmf3", [0.0, 0.0], [1.0, 1.5], _mmf3_batch)


def mmf4() -> ProblemSpec:
    return _mmf_spec("mmf4", [-1.0, 0.0], [1.0, 2.0], _mmf4_batch)


def mmf5() -> ProblemSpec:
    return _mmf_spec("mmf5", [-1.0, 1.0], [3.0, 3.0], _mmf5_batch)


def mmf6() -> ProblemSpec:
    return _mmf_spec("mmf6", [-1.0, 1.0], [3.0, 2.0], _mmf6_batch)


def mmf7() -> ProblemSpec:
    return _mmf_spec("mmf7", [1.0, -1.0], [3.0, 1.0], _mmf7_batch)


def mmf8() -> ProblemSpec:
    return _mmf_spec("mmf8", [-math.pi, 0.0], [math.pi, 9.0], _mmf8_batch)


def mmf9(n_p: int = 2) -> ProblemSpec:
    return _mmf_spec(
        "mmf9", [0.1, 0.1], [1.1, 1.1],
        lambda X: _mmf9_batch(X, n_p), {"n_p": n_p},
    )


def mmf10() -> ProblemSpec:
    return _mmf_spec("mmf10", [0.1, 0.1], [1.1, 1.1], _mmf10_batch)


def mmf11(n_p: int = 2) -> ProblemSpec:
    return _mmf_spec(
        "mmf11", [0.1, 0.1], [1.1, 1.1],
        lambda X: _mmf11_batch(X, n_p), {"n_p": n_p},
    )


def mmf12(n_p: int = 2, q: int = 4) -> ProblemSpec:
    return _mmf_spec(
        "mmf12", [0.0, 0.0], [1.0, 1.0],
        lambda X: _mmf12_batch(X, n_p, q), {"n_p": n_p, "q": q},
    )


# ---------------------------------------------------------------------------
# Welded beam design problem
# ---------------------------------------------------------------------------

APPLIED_LOAD = 6000.0        # lbs carried by the beam
SHEAR_LIMIT = 13600.0        # psi, allowable shear stress at the weld
YIELD_LIMIT = 30000.0        # psi, acceptable yield strength of the material


def _welded_beam_batch(X, yield_limit):
    h, l, t, b = X[:, 0], X[:, 1], X[:, 2], X[:, 3]
    f1 = 1.10471 * h * h * l + 0.04811 * t * b * (14.0 + l)
    f2 = 2.1952 / (t ** 3 * b)
    tau_p = APPLIED_LOAD / (np.sqrt(2.0) * h * l)
    half_diag = np.sqrt(0.25 * (l ** 2 + (h + t) ** 2))
    tau_pp = (
        APPLIED_LOAD * (14.0 + 0.5 * l) * half_diag
        / (2.0 * (0.707 * h * l * (l ** 2 / 12.0 + 0.25 * (h + t) ** 2)))
    )
    tau = np.sqrt(tau_p ** 2 + tau_pp ** 2 + l * tau_p * tau_pp / half_diag)
    sigma = 504000.0 / (t ** 2 * b)
    p_c = 64746.022 * (1.0 - 0.0282346 * t) * t * b ** 3
    g = np.column_stack((
        SHEAR_LIMIT - tau,
        yield_limit - sigma,
        b - h,
        p_c - APPLIED_LOAD,
    ))
    violation = np.maximum(0.0, -g).sum(axis=1)
    return _pack(f1, f2), violation


def welded_beam(yield_limit: float = YIELD_LIMIT) -> ProblemSpec:
    """Bi-objective welded beam: minimize cost and end deflection.

    Feasible designs satisfy shear stress <= 13600 psi, normal stress <=
    ``yield_limit`` psi, beam width >= weld thickness, and buckling load >=
    the 6000 lbs applied load. ``violation`` sums the shortfall of each
    constraint.
    """
    return ProblemSpec(
        name="welded_beam",
        dimension=4,
        lower_bounds=np.array([0.125, 0.1, 0.1, 0.125]),
        upper_bounds=np.array([5.0, 10.0, 10.0, 5.0]),
        objective_count=2,
        has_constraints=True,
        tunables={"yield_limit": yield_limit},
        _batch=lambda X: _welded_beam_batch(X, yield_limit),
    )


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

_FACTORIES: dict[str, Callable[..., ProblemSpec]] = {
    "zdt1": zdt1,
    "zdt2": zdt2,
    "zdt3": zdt3,
    "zdt4": zdt4,
    "zdt5": zdt5,
    "mmf1": mmf1,
    "mmf2": mmf2,
    "mmf3": mmf3,
    "mmf4": mmf4,
    "mmf5": mmf5,
    "mmf6": mmf6,
    "mmf7": mmf7,
    "mmf8": mmf8,
    "mmf9": mmf9,
    "mmf10": mmf10,
    "mmf11": mmf11,
    "mmf12": mmf12,
    "welded_beam": welded_beam,
}


def available_problems() -> list[str]:
    return list(_FACTORIES)


def get_problem(name: str, **kwargs) -> ProblemSpec:
    """Build a registered problem by name; keyword args reach the factory."""
    try:
        factory = _FACTORIES[name]
    except KeyError:
        raise ValueError(
            f"unknown problem {name!r}; available: {', '.join(_FACTORIES)}"
        ) from None
    return factory(**kwargs)
