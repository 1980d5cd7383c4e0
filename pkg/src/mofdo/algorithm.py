"""Fitness-dependent multi-objective search loop.

Each scout bee moves by adding a pace vector to its position. The pace
magnitude comes from the fitness weight, the ratio of the leader's objective
sum to the bee's own, while its direction is decided randomly. A move is
accepted only when the new evaluation constrained-dominates the old one;
accepted paces are remembered and retried after a rejected fresh move.
Every iteration offers each bee's current solution and one polynomial
mutant to a bounded non-dominated archive, which is the algorithm's output.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np
from sklearn.base import BaseEstimator

from .archive import Archive
from .dominance import EvaluatedSolution, constrained_dominates, nondominated_filter
from .metrics import igd
from .mutation import MutationParams, polynomial_mutation
from .problems import ProblemSpec, ReferenceFront, clamp_to_bounds, evaluate

__all__ = [
    "ScoutBee",
    "MofdoConfig",
    "RunRecord",
    "fitness_weight",
    "compute_pace",
    "step",
    "run",
    "MofdoOptimizer",
]


@dataclass
class ScoutBee:
    """One search individual: position, its evaluation, and pace memory."""

    position: np.ndarray
    evaluation: EvaluatedSolution
    saved_pace: np.ndarray | None = None


@dataclass
class MofdoConfig:
    """Run configuration; defaults mirror the standard benchmark protocol."""

    population_size: int = 100
    iterations: int = 500
    archive_capacity: int = 100
    weight_factor: int = 0
    grid_divisions: int = 7
    leader_pressure: float = 2.0
    delete_pressure: float = 2.0
    grid_inflation: float = 1.0
    mutation: MutationParams = field(default_factory=MutationParams)
    seed: int = 0

    def __post_init__(self) -> None:
        if self.population_size < 2:
            raise ValueError("population_size must be >= 2")
        if self.iterations < 0:
            raise ValueError("iterations must be >= 0")
        if self.archive_capacity < 1:
            raise ValueError("archive_capacity must be >= 1")
        if self.weight_factor not in (0, 1):
            raise ValueError("weight_factor must be 0 or 1")


@dataclass
class RunRecord:
    """Everything one run produced: final archive, traces, and provenance."""

    final_archive: list[EvaluatedSolution]
    discovery_trace: list[int]
    igd_trace: list[float] | None
    seed: int
    config: MofdoConfig
    wall_time: float


def fitness_weight(current: EvaluatedSolution, leader: EvaluatedSolution,
                   weight_factor: int) -> float:
    """|sum(leader objectives) / sum(current objectives)| - weight_factor.

    A zero current sum returns infinity, which routes pace computation to
    the random-walk branch.
    """
    current_sum = current.objective_sum
    if current_sum == 0.0:
        return math.inf
    return abs(leader.objective_sum / current_sum) - weight_factor


def compute_pace(bee: ScoutBee, leader: EvaluatedSolution, fw: float, rng) -> np.ndarray:
    """Movement vector for one bee.

    Outside the open interval 0 < fw < 1 (or when the bee's objective sum is
    zero) the pace is a random walk, x_j * r_j with r_j uniform in [-1, 1]
    per coordinate. Inside it, the pace is (x - x_leader) * fw with its sign
    flipped when a single uniform draw in [-1, 1] lands below zero.
    """
    if fw >= 1.0 or fw <= 0.0 or bee.evaluation.objective_sum == 0.0:
        r = rng.uniform(-1.0, 1.0, bee.position.shape[0])
        return bee.position * r
    r = rng.uniform(-1.0, 1.0)
    pace = (bee.position - leader.position) * fw
    if r < 0.0:
        return -pace
    return pace


def _fallback_leader(bees: list[ScoutBee]) -> EvaluatedSolution:
    # only reachable when the archive is empty, i.e. before its first insert
    survivors = nondominated_filter([b.evaluation for b in bees])
    return min(survivors, key=lambda s: s.objective_sum)


def step(bees: list[ScoutBee], archive: Archive, problem: ProblemSpec,
         config: MofdoConfig, rng) -> None:
    """Advance every bee once, in order, updating the archive in place.

    Per bee: pick a leader from a sparse archive cell, compute and try a
    fresh pace, fall back to the saved pace if the fresh move does not
    dominate, otherwise stay put; then offer the bee's current evaluation
    and one polynomial mutant of its position to the archive. Later bees see
    the archive as mutated by earlier ones in the same iteration.
    """
    for bee in bees:
        if len(archive) > 0:
            leader = archive.select_leader(rng, pressure=config.leader_pressure)
        else:
            leader = _fallback_leader(bees)
        fw = fitness_weight(bee.evaluation, leader, config.weight_factor)
        pace = compute_pace(bee, leader, fw, rng)

        candidate_x = clamp_to_bounds(problem, bee.position + pace)
        candidate = evaluate(problem, candidate_x, validate=False)
        if constrained_dominates(candidate, bee.evaluation):
            bee.position = candidate_x
            bee.evaluation = candidate
            bee.saved_pace = pace
        elif bee.saved_pace is not None:
            retry_x = clamp_to_bounds(problem, bee.position + bee.saved_pace)
            retry = evaluate(problem, retry_x, validate=False)
            if constrained_dominates(retry, bee.evaluation):
                bee.position = retry_x
                bee.evaluation = retry

        mutant_x = polynomial_mutation(bee.position, problem, config.mutation, rng)
        mutant = evaluate(problem, mutant_x, validate=False)
        archive.insert(bee.evaluation, rng)
        archive.insert(mutant, rng)


def run(problem: ProblemSpec, config: MofdoConfig,
        reference_front: ReferenceFront | None = None) -> RunRecord:
    """Execute a full seeded run and return its record.

    The population starts uniformly at random within bounds, the archive is
    seeded with the non-dominated part of that population, and the archive
    size (plus IGD, when a reference front is supplied) is recorded after
    every iteration. Identical inputs give identical records.
    """
    rng = np.random.default_rng(config.seed)
    start = time.perf_counter()

    X0 = rng.uniform(problem.lower_bounds, problem.upper_bounds,
                     size=(config.population_size, problem.dimension))
    bees = [ScoutBee(position=x, evaluation=evaluate(problem, x)) for x in X0]

    archive = Archive(
        capacity=config.archive_capacity,
        objective_count=problem.objective_count,
        grid_divisions=config.grid_divisions,
        grid_inflation=config.grid_inflation,
        leader_pressure=config.leader_pressure,
        delete_pressure=config.delete_pressure,
    )
    for solution in nondominated_filter([b.evaluation for b in bees]):
        archive.insert(solution, rng)

    discovery: list[int] = []
    igd_trace: list[float] | None = [] if reference_front is not None else None
    for _ in range(config.iterations):
        step(bees, archive, problem, config, rng)
        discovery.append(len(archive))
        if igd_trace is not None:
            igd_trace.append(igd(archive.objectives_array(), reference_front))

    return RunRecord(
        final_archive=archive.members,
        discovery_trace=discovery,
        igd_trace=igd_trace,
        seed=config.seed,
        config=config,
        wall_time=time.perf_counter() - start,
    )


class MofdoOptimizer(BaseEstimator):
    """Scikit-learn style front end for the optimizer.

    Constructor arguments are stored verbatim (so ``get_params`` /
    ``set_params`` / ``clone`` behave as usual) and validated in ``fit``,
    which runs the search on a :class:`~mofdo.problems.ProblemSpec` instead
    of a data matrix.

    Attributes set by ``fit``:
        archive_: Final archive as a list of evaluated solutions.
        pareto_front_: Objective vectors of the archive, shape (m, n_obj).
        pareto_set_: Decision vectors of the archive, shape (m, dim).
        run_record_: Full :class:`RunRecord` including traces.
        n_iter_: Number of iterations executed.

    Example:
        >>> from mofdo import MofdoOptimizer, get_problem
        >>> opt = MofdoOptimizer(iterations=50, random_state=0)
        >>> front = opt.fit(get_problem("zdt1")).pareto_front_
    """

    def __init__(
        self,
        population_size: int = 100,
        iterations: int = 500,
        archive_capacity: int = 100,
        weight_factor: int = 0,
        grid_divisions: int = 7,
        leader_pressure: float = 2.0,
        delete_pressure: float = 2.0,
        grid_inflation: float = 1.0,
        mutation_index: float = 5.0,
        mutation_rate: float | None = None,
        random_state: int | None = None,
    ):
        self.population_size = population_size
        self.iterations = iterations
        self.archive_capacity = archive_capacity
        self.weight_factor = weight_factor
        self.grid_divisions = grid_divisions
        self.leader_pressure = leader_pressure
        self.delete_pressure = delete_pressure
        self.grid_inflation = grid_inflation
        self.mutation_index = mutation_index
        self.mutation_rate = mutation_rate
        self.random_state = random_state

    def _build_config(self) -> MofdoConfig:
        if self.random_state is None:
            seed = int(np.random.SeedSequence().generate_state(1)[0])
        else:
            seed = int(self.random_state)
        return MofdoConfig(
            population_size=self.population_size,
            iterations=self.iterations,
            archive_capacity=self.archive_capacity,
            weight_factor=self.weight_factor,
            grid_divisions=self.grid_divisions,
            leader_pressure=self.leader_pressure,
            delete_pressure=self.delete_pressure,
            grid_inflation=self.grid_inflation,
            mutation=MutationParams(
                distribution_index=self.mutation_index,
                per_variable_rate=self.mutation_rate,
            ),
            seed=seed,
        )

    def fit(self, problem: ProblemSpec, reference_front: ReferenceFront | None = None):
        """Run the optimizer on ``problem``; returns self."""
        record = run(problem, self._build_config(), reference_front)
        self.run_record_ = record
        self.archive_ = record.final_archive
        self.pareto_front_ = np.array([s.objectives for s in record.final_archive])
        self.pareto_set_ = np.array([s.position for s in record.final_archive])
        self.n_iter_ = record.config.iterations
        return self
