import math

import numpy as np
import pytest

from mofdo.algorithm import (
    MofdoConfig,
    ScoutBee,
    compute_pace,
    fitness_weight,
    run,
    step,
)
from mofdo.archive import Archive
from mofdo.dominance import EvaluatedSolution, constrained_dominates, nondominated_filter
from mofdo.mutation import MutationParams
from mofdo.problems import ProblemSpec, clamp_to_bounds, evaluate, get_problem


def sol(objectives, position=None, violation=0.0):
    obj = np.asarray(objectives, dtype=float)
    pos = np.zeros(len(obj)) if position is None else np.asarray(position, dtype=float)
    return EvaluatedSolution(position=pos, objectives=obj, violation=violation)


class ScriptedRng:
    def __init__(self, uniforms):
        self.uniforms = list(uniforms)

    def uniform(self, low, high, size=None):
        out = np.asarray(self.uniforms.pop(0), dtype=float)
        if size is None:
            return float(out)
        return np.broadcast_to(out, (size,)).copy()


def quadratic_problem(dimension=2):
    """Toy problem whose two objectives improve together toward the origin."""

    def batch(X):
        s = (X ** 2).sum(axis=1)
        out = np.empty((X.shape[0], 2))
        out[:, 0] = s
        out[:, 1] = s + 1.0
        return out, np.zeros(X.shape[0])

    return ProblemSpec(
        name="quadratic",
        dimension=dimension,
        lower_bounds=np.full(dimension, -4.0),
        upper_bounds=np.full(dimension, 4.0),
        objective_count=2,
        _batch=batch,
    )


class TestFitnessWeight:
    def test_ratio_without_offset(self):
        assert fitness_weight(sol((0.6, 0.4)), sol((0.3, 0.2)), 0) == pytest.approx(0.5)

    def test_identity_ratio(self):
        s = sol((0.25, 0.75))
        assert fitness_weight(s, s, 0) == pytest.approx(1.0)

    def test_offset_shifts_by_one(self):
        assert fitness_weight(sol((0.6, 0.4)), sol((0.3, 0.2)), 1) == pytest.approx(-0.5)

    def test_zero_current_sum_returns_random_walk_sentinel(self):
        fw = fitness_weight(sol((0.0, 0.0)), sol((0.3, 0.2)), 0)
        assert fw == math.inf

    def test_absolute_value_applied(self):
        assert fitness_weight(sol((1.0, 1.0)), sol((-0.5, -0.5)), 0) == pytest.approx(0.5)


class TestComputePace:
    def test_unit_weight_takes_random_walk_branch(self):
        bee = ScoutBee(position=np.array([2.0, 3.0]), evaluation=sol((1, 1)))
        rng = ScriptedRng([[0.0, 0.0]])
        pace = compute_pace(bee, sol((1, 1), position=(0, 0)), 1.0, rng)
        np.testing.assert_array_equal(pace, [0.0, 0.0])

    def test_random_walk_scales_with_position(self):
        bee = ScoutBee(position=np.array([2.0, -3.0]), evaluation=sol((1, 1)))
        rng = ScriptedRng([[0.5, 0.5]])
        pace = compute_pace(bee, sol((1, 1), position=(0, 0)), 2.0, rng)
        np.testing.assert_array_equal(pace, [1.0, -1.5])

    def test_fractional_weight_moves_relative_to_leader(self):
        bee = ScoutBee(position=np.array([2.0, 2.0]), evaluation=sol((1, 1)))
        leader = sol((0.5, 0.5), position=(1.0, 1.0))
        pace = compute_pace(bee, leader, 0.5, ScriptedRng([0.25]))
        np.testing.assert_array_equal(pace, [0.5, 0.5])

    def test_negative_draw_flips_direction(self):
        bee = ScoutBee(position=np.array([2.0, 2.0]), evaluation=sol((1, 1)))
        leader = sol((0.5, 0.5), position=(1.0, 1.0))
        pace = compute_pace(bee, leader, 0.5, ScriptedRng([-0.25]))
        np.testing.assert_array_equal(pace, [-0.5, -0.5])

    def test_zero_objective_sum_forces_random_walk(self):
        bee = ScoutBee(position=np.array([2.0, 2.0]), evaluation=sol((1.0, -1.0)))
        rng = ScriptedRng([[0.5, 0.5]])
        pace = compute_pace(bee, sol((1, 1), position=(0, 0)), 0.5, rng)
        np.testing.assert_array_equal(pace, [1.0, 1.0])


def make_state(problem, positions, config, seed=0):
    rng = np.random.default_rng(seed)
    bees = [ScoutBee(position=np.asarray(p, dtype=float),
                     evaluation=evaluate(problem, np.asarray(p, dtype=float)))
            for p in positions]
    archive = Archive(capacity=config.archive_capacity,
                      objective_count=problem.objective_count,
                      grid_divisions=config.grid_divisions,
                      grid_inflation=config.grid_inflation,
                      leader_pressure=config.leader_pressure,
                      delete_pressure=config.delete_pressure)
    for s in nondominated_filter([b.evaluation for b in bees]):
        archive.insert(s, rng)
    return bees, archive


class TestStep:
    def test_lone_bee_with_rejected_move_stays_put(self):
        problem = quadratic_problem()
        config = MofdoConfig(population_size=2, iterations=1, archive_capacity=4,
                             mutation=MutationParams(per_variable_rate=0.0))
        bees, archive = make_state(problem, [(0.0, 0.0), (3.0, 3.0)], config)
        # the origin bee cannot improve: every candidate is dominated
        origin = bees[0]
        before = origin.position.copy()
        step(bees, archive, problem, config, np.random.default_rng(1))
        np.testing.assert_array_equal(origin.position, before)
        assert origin.saved_pace is None

    def test_accepted_fresh_move_saves_its_pace(self):
        problem = quadratic_problem()
        config = MofdoConfig(population_size=4, iterations=1, archive_capacity=8,
                             mutation=MutationParams(per_variable_rate=0.0))
        positions = [(0.1, 0.1), (2.0, 1.0), (-3.0, 2.0), (1.5, -2.5)]
        bees, archive = make_state(problem, positions, config)
        before = [b.position.copy() for b in bees]
        step(bees, archive, problem, config, np.random.default_rng(2))
        moved = [(b, p) for b, p in zip(bees, before) if not np.array_equal(b.position, p)]
        assert moved, "expected at least one accepted move"
        for bee, old in moved:
            assert bee.saved_pace is not None
            # first-iteration acceptances are always fresh-pace moves
            np.testing.assert_array_equal(
                clamp_to_bounds(problem, old + bee.saved_pace), bee.position)
            assert constrained_dominates(bee.evaluation, evaluate(problem, old))

    def test_saved_pace_reused_after_rejection(self):
        problem = quadratic_problem()
        config = MofdoConfig(population_size=2, iterations=1, archive_capacity=4,
                             mutation=MutationParams(per_variable_rate=0.0))
        bees, archive = make_state(problem, [(2.0, 2.0), (0.5, 0.5)], config)
        bee = bees[0]
        bee.saved_pace = np.array([-0.5, -0.5])  # known improving direction
        # force the fresh pace to be rejected: random walk with big positive r
        class ForcedRng:
            def __init__(self):
                self.inner = np.random.default_rng(3)
            def uniform(self, low, high, size=None):
                if size is None:
                    return 0.9
                return np.full(size, 0.9)
            def random(self, size=None):
                return self.inner.random(size)
            def integers(self, *a, **k):
                return self.inner.integers(*a, **k)
        old = bee.position.copy()
        step(bees[:1], archive, problem, config, ForcedRng())
        np.testing.assert_array_equal(bee.position, old + [-0.5, -0.5])
        np.testing.assert_array_equal(bee.saved_pace, [-0.5, -0.5])

    def test_empty_archive_falls_back_to_population_leader(self):
        problem = quadratic_problem()
        config = MofdoConfig(population_size=2, iterations=1, archive_capacity=4,
                             mutation=MutationParams(per_variable_rate=0.0))
        bees = [ScoutBee(position=np.array(p), evaluation=evaluate(problem, np.array(p)))
                for p in [(2.0, 2.0), (0.5, 0.5)]]
        archive = Archive(capacity=4, objective_count=2)
        step(bees, archive, problem, config, np.random.default_rng(9))
        assert len(archive) > 0  # inserts happened despite the empty start

    def test_bee_evaluation_never_worsens(self):
        problem = get_problem("zdt1", dimension=8)
        config = MofdoConfig(population_size=10, iterations=1, archive_capacity=20)
        rng = np.random.default_rng(4)
        X0 = rng.uniform(problem.lower_bounds, problem.upper_bounds, size=(10, 8))
        bees, archive = make_state(problem, X0, config)
        for _ in range(30):
            before = [b.evaluation for b in bees]
            step(bees, archive, problem, config, rng)
            for bee, old in zip(bees, before):
                assert not constrained_dominates(old, bee.evaluation)

    def test_single_step_deterministic(self):
        problem = get_problem("zdt1", dimension=10)
        config = MofdoConfig(population_size=10, iterations=1, archive_capacity=15)

        def one_step(seed):
            rng = np.random.default_rng(seed)
            X0 = rng.uniform(problem.lower_bounds, problem.upper_bounds, size=(10, 10))
            bees, archive = make_state(problem, X0, config)
            step(bees, archive, problem, config, rng)
            return bees, archive

        bees_a, arch_a = one_step(7)
        bees_b, arch_b = one_step(7)
        for a, b in zip(bees_a, bees_b):
            np.testing.assert_array_equal(a.position, b.position)
            np.testing.assert_array_equal(a.evaluation.objectives, b.evaluation.objectives)
            if a.saved_pace is None:
                assert b.saved_pace is None
            else:
                np.testing.assert_array_equal(a.saved_pace, b.saved_pace)
        np.testing.assert_array_equal(arch_a.objectives_array(), arch_b.objectives_array())
        np.testing.assert_array_equal(arch_a.positions_array(), arch_b.positions_array())


class TestRun:
    def test_zero_iterations_returns_filtered_initial_population(self):
        problem = get_problem("zdt1", dimension=6)
        config = MofdoConfig(population_size=20, iterations=0,
                             archive_capacity=50, seed=11)
        record = run(problem, config)
        rng = np.random.default_rng(11)
        X0 = rng.uniform(problem.lower_bounds, problem.upper_bounds, size=(20, 6))
        expected = nondominated_filter(
            [evaluate(problem, x) for x in X0])
        got = sorted(tuple(s.objectives) for s in record.final_archive)
        want = sorted(tuple(s.objectives) for s in expected)
        assert got == pytest.approx(want)
        assert record.discovery_trace == []
        assert record.igd_trace is None

    def test_traces_have_one_entry_per_iteration(self):
        problem = get_problem("zdt1", dimension=6)
        from mofdo.problems import reference_front
        ref = reference_front(problem, 150)
        config = MofdoConfig(population_size=10, iterations=12,
                             archive_capacity=20, seed=5)
        record = run(problem, config, ref)
        assert len(record.discovery_trace) == 12
        assert len(record.igd_trace) == 12
        assert all(0 <= v <= 20 for v in record.discovery_trace)
        assert all(v >= 0 for v in record.igd_trace)
        assert record.wall_time > 0

    def test_members_respect_bounds_and_nondomination(self):
        problem = get_problem("zdt1", dimension=10)
        config = MofdoConfig(population_size=20, iterations=40,
                             archive_capacity=25, seed=6)
        record = run(problem, config)
        for s in record.final_archive:
            assert (s.position >= problem.lower_bounds - 1e-9).all()
            assert (s.position <= problem.upper_bounds + 1e-9).all()
        assert nondominated_filter(record.final_archive) == record.final_archive

    def test_identical_seeds_identical_records(self):
        problem = get_problem("mmf1")
        config = MofdoConfig(population_size=12, iterations=25,
                             archive_capacity=15, seed=42)
        rec_a = run(problem, config)
        rec_b = run(problem, config)
        assert rec_a.discovery_trace == rec_b.discovery_trace
        assert len(rec_a.final_archive) == len(rec_b.final_archive)
        for a, b in zip(rec_a.final_archive, rec_b.final_archive):
            np.testing.assert_array_equal(a.position, b.position)
            np.testing.assert_array_equal(a.objectives, b.objectives)

    def test_config_validation(self):
        with pytest.raises(ValueError):
            MofdoConfig(population_size=1)
        with pytest.raises(ValueError):
            MofdoConfig(weight_factor=2)
        with pytest.raises(ValueError):
            MofdoConfig(iterations=-1)
