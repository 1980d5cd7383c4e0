"""Multi-objective fitness dependent optimizer.

A swarm metaheuristic maintaining a grid-partitioned archive of
non-dominated solutions, together with the ZDT and multi-modal benchmark
suites, a welded beam design problem, the inverted generational distance
indicator, and nonparametric significance tests for comparing result
samples.
"""

from .algorithm import (
    MofdoConfig,
    MofdoOptimizer,
    RunRecord,
    ScoutBee,
    compute_pace,
    fitness_weight,
    run,
    step,
)
from .archive import Archive, GridIndex, InsertOutcome
from .dominance import (
    EvaluatedSolution,
    constrained_dominates,
    dominates,
    nondominated_filter,
    nondominated_mask,
)
from .metrics import RunSummary, igd, summarize
from .mutation import MutationParams, polynomial_mutation
from .problems import (
    ProblemSpec,
    ReferenceFront,
    available_problems,
    clamp_to_bounds,
    evaluate,
    evaluate_batch,
    get_problem,
    reference_front,
)
from .stats import RankTable, friedman, wilcoxon_rank_sum

__version__ = "0.1.0"

__all__ = [
    "Archive",
    "EvaluatedSolution",
    "GridIndex",
    "InsertOutcome",
    "MofdoConfig",
    "MofdoOptimizer",
    "MutationParams",
    "ProblemSpec",
    "RankTable",
    "ReferenceFront",
    "RunRecord",
    "RunSummary",
    "ScoutBee",
    "available_problems",
    "clamp_to_bounds",
    "compute_pace",
    "constrained_dominates",
    "dominates",
    "evaluate",
    "evaluate_batch",
    "fitness_weight",
    "friedman",
    "get_problem",
    "igd",
    "nondominated_filter",
    "nondominated_mask",
    "polynomial_mutation",
    "reference_front",
    "run",
    "step",
    "summarize",
    "wilcoxon_rank_sum",
]
