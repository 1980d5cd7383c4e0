"""Release acceptance suite.

One test per criterion, each printing a single verdict line; run with
``pytest tests/test_acceptance.py -v -s``. The long-running quality checks
(criteria 2-4) execute the full benchmark protocol and take a couple of
minutes combined.
"""

import time

import numpy as np
import pytest

from mofdo.algorithm import MofdoConfig, run
from mofdo.archive import Archive
from mofdo.cli import main
from mofdo.dominance import EvaluatedSolution, nondominated_filter
from mofdo.metrics import igd
from mofdo.mutation import MutationParams, polynomial_mutation
from mofdo.problems import ProblemSpec, evaluate, get_problem, reference_front
from mofdo.stats import RankTable, friedman, wilcoxon_rank_sum

from test_dominance import oracle_filter
from test_metrics import oracle_igd
from test_stats import CLASSICAL_RANKS, MULTIMODAL_RANKS, exact_rank_sum_p

SEEDS = list(range(10))


def verdict(number: int, name: str, ok: bool, detail: str) -> None:
    print(f"\n[criterion {number}] {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"criterion {number} {name}: {detail}"


def quality_protocol(problem_name: str, iterations: int = 500):
    problem = get_problem(problem_name)
    ref = reference_front(problem, 1000)
    config = dict(population_size=100, iterations=iterations, archive_capacity=100)
    igds = []
    for seed in SEEDS:
        record = run(problem, MofdoConfig(seed=seed, **config))
        igds.append(igd([s.objectives for s in record.final_archive], ref))
    return np.array(igds)


def test_criterion_1_friedman_exactness():
    table = RankTable(ranks=np.array(CLASSICAL_RANKS + MULTIMODAL_RANKS))
    assert table.column_totals.tolist() == [32, 35, 47, 56]
    chi, p = friedman(table)
    ok = abs(chi - 13.0235) <= 1e-3 and abs(p - 0.0046) <= 5e-4
    verdict(1, "Friedman exactness", ok, f"chi2={chi:.4f} p={p:.5f}")


def test_criterion_2_zdt1_quality():
    start = time.perf_counter()
    igds = quality_protocol("zdt1")
    elapsed = time.perf_counter() - start
    median = float(np.median(igds))
    best = float(igds.min())
    ok = median <= 0.15 and best <= 0.08
    verdict(2, "ZDT1 quality", ok,
            f"median={median:.5f} (<=0.15) best={best:.5f} (<=0.08) "
            f"runtime={elapsed:.0f}s (target <120s)")


def test_criterion_3_zdt3_quality():
    igds = quality_protocol("zdt3")
    median = float(np.median(igds))
    ok = median <= 0.20
    verdict(3, "ZDT3 quality (discontinuous front)", ok,
            f"median={median:.5f} (<=0.20)")


def test_criterion_4_welded_beam():
    problem = get_problem("welded_beam")
    config = dict(population_size=100, iterations=100, archive_capacity=100)
    good_archives = 0
    fast_fills = 0
    worst_violation = 0.0
    for seed in SEEDS:
        record = run(problem, MofdoConfig(seed=seed, **config))
        members = record.final_archive
        recomputed = [evaluate(problem, s.position) for s in members]
        worst_violation = max(worst_violation, max(s.violation for s in recomputed))
        feasible = sum(s.violation == 0.0 for s in recomputed)
        mutually_nondominated = nondominated_filter(members) == members
        good_archives += feasible >= 90 and mutually_nondominated
        full_at = next((i + 1 for i, v in enumerate(record.discovery_trace)
                        if v >= 100), None)
        fast_fills += full_at is not None and full_at <= 60
    ok = good_archives >= 8 and fast_fills >= 8 and worst_violation < 1e-9
    verdict(4, "Welded beam design", ok,
            f"archives with >=90 feasible non-dominated designs: {good_archives}/10, "
            f"capacity reached by iter 60: {fast_fills}/10, "
            f"max violation={worst_violation:.2e}")


def test_criterion_5a_filter_matches_brute_force():
    rng = np.random.default_rng(100)
    for case in range(200):
        n_obj = 3 if case % 4 == 0 else 2
        size = int(rng.integers(5, 50))
        sols = []
        for _ in range(size):
            violation = float(rng.random()) if rng.random() < 0.2 else 0.0
            sols.append(EvaluatedSolution(
                position=np.zeros(2),
                objectives=rng.random(n_obj),
                violation=violation,
            ))
        assert nondominated_filter(sols) == oracle_filter(sols)
    verdict(5, "oracle suite (a) non-dominated filter", True,
            "200 random sets match O(n^2) brute force")


def test_criterion_5b_igd_matches_double_loop():
    rng = np.random.default_rng(101)
    worst = 0.0
    for _ in range(100):
        obtained = rng.random((int(rng.integers(5, 30)), 2))
        reference = rng.random((int(rng.integers(5, 30)), 2))
        worst = max(worst, abs(igd(obtained, reference) - oracle_igd(obtained, reference)))
    verdict(5, "oracle suite (b) IGD", worst <= 1e-12,
            f"100 set pairs, max |difference|={worst:.2e} (<=1e-12)")


def test_criterion_5c_archive_survives_insert_storm():
    rng = np.random.default_rng(102)
    draws = np.random.default_rng(103)
    archive = Archive(capacity=100, objective_count=2)
    for i in range(10_000):
        violation = float(draws.random()) if draws.random() < 0.1 else 0.0
        candidate = EvaluatedSolution(
            position=draws.random(2),
            objectives=draws.random(2),
            violation=violation,
        )
        archive.insert(candidate, rng)
        assert len(archive) <= 100
    members = archive.members
    ok = oracle_filter(members) == members
    verdict(5, "oracle suite (c) archive non-domination", ok,
            f"10^4 inserts, final size={len(members)}, brute-force recheck")


def test_criterion_5d_mutation_respects_bounds():
    rng = np.random.default_rng(104)
    lower = -np.linspace(0.5, 3.0, 100)
    upper = np.linspace(0.5, 4.0, 100)
    problem = ProblemSpec(name="box", dimension=100, lower_bounds=lower,
                          upper_bounds=upper, objective_count=2)
    params = MutationParams(per_variable_rate=1.0)
    draws = 0
    for _ in range(10_000):
        x = rng.uniform(lower, upper)
        out = polynomial_mutation(x, problem, params, rng)
        assert (out >= lower).all() and (out <= upper).all()
        draws += problem.dimension
    verdict(5, "oracle suite (d) mutation bounds", draws >= 1_000_000,
            f"{draws} coordinate draws all in bounds")


def test_criterion_5e_wilcoxon_direction_agreement():
    rng = np.random.default_rng(3)
    agree = 0
    boundary_only = True
    for _ in range(50):
        n1 = int(rng.integers(3, 7))
        n2 = int(rng.integers(3, 7))
        a = rng.integers(0, 12, n1).astype(float)
        b = rng.integers(0, 12, n2).astype(float) + rng.choice([0.0, 4.0])
        approx_p = wilcoxon_rank_sum(a, b)
        exact_p = exact_rank_sum_p(a, b)
        if (approx_p < 0.05) == (exact_p < 0.05):
            agree += 1
        elif not (0.02 <= approx_p <= 0.10 and 0.02 <= exact_p <= 0.10):
            boundary_only = False  # disagreement away from alpha is a real bug
    ok = agree >= 48 and boundary_only
    verdict(5, "oracle suite (e) Wilcoxon direction", ok,
            f"{agree}/50 agree with exact enumeration; "
            "any exceptions sit on the alpha=0.05 boundary")


def test_criterion_6_byte_identical_reruns(tmp_path):
    args = ["--problem", "zdt1,mmf1", "--runs", "2", "--iterations", "5",
            "--pop", "12", "--archive", "16", "--seed", "7",
            "--ref-points", "150"]
    assert main(args + ["--out", str(tmp_path / "a")]) == 0
    assert main(args + ["--out", str(tmp_path / "b")]) == 0
    files_a = sorted((tmp_path / "a").iterdir())
    files_b = sorted((tmp_path / "b").iterdir())
    same = [p.name for p in files_a] == [p.name for p in files_b] and all(
        x.read_bytes() == y.read_bytes() for x, y in zip(files_a, files_b))
    verdict(6, "deterministic experiment output", same,
            f"{len(files_a)} files byte-identical across reruns")


def test_criterion_7_linear_iteration_scaling():
    problem = get_problem("zdt1")
    iterations = 20

    def per_iteration_seconds(population, seed):
        config = MofdoConfig(population_size=population, iterations=iterations,
                             archive_capacity=50, seed=seed)
        record = run(problem, config)
        return record.wall_time / iterations

    t200 = [per_iteration_seconds(200, seed) for seed in range(5)]
    t400 = [per_iteration_seconds(400, seed) for seed in range(5)]
    m200 = float(np.median(t200))
    m400 = float(np.median(t400))
    ratio = m400 / m200
    verdict(7, "linear iteration scaling", ratio < 3.0,
            f"per-iteration time {m200 * 1e3:.1f}ms @200 vs {m400 * 1e3:.1f}ms @400, "
            f"ratio={ratio:.2f} (<3)")
