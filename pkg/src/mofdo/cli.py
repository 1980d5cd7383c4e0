"""Seeded experiment driver.

Runs the optimizer over selected benchmark problems, writing per-run front
files, IGD traces, discovery curves, a reference front per problem, and a
self-describing experiment summary. Every output is a deterministic
function of the configuration and base seed; run indices map to seeds as
``base_seed + run_index``.

Exit codes: 0 success, 2 unknown problem name, 3 unwritable output
directory.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .algorithm import MofdoConfig, RunRecord, run
from .io import format_real, write_front_file
from .metrics import igd, summarize
from .mutation import MutationParams
from .problems import ProblemSpec, available_problems, get_problem, reference_front

__all__ = ["ExperimentConfig", "run_experiment", "emit_reference_front", "main"]

EXIT_OK = 0
EXIT_UNKNOWN_PROBLEM = 2
EXIT_UNWRITABLE_OUTPUT = 3


@dataclass
class ExperimentConfig:
    """Everything one experiment invocation needs."""

    problems: list[str]
    runs: int = 1
    base_seed: int = 0
    iterations: int = 500
    population_size: int = 100
    archive_capacity: int = 100
    weight_factor: int = 0
    grid_divisions: int = 7
    leader_pressure: float = 2.0
    delete_pressure: float = 2.0
    grid_inflation: float = 1.0
    mutation_index: float = 5.0
    mutation_rate: float | None = None
    ref_points: int = 1000
    output_dir: Path = field(default_factory=lambda: Path("mofdo-results"))
    output_format: str = "structured-text"  # or "table-text"

    def __post_init__(self) -> None:
        if self.runs < 1:
            raise ValueError("runs must be >= 1")
        if self.output_format not in ("structured-text", "table-text"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        self.output_dir = Path(self.output_dir)

    def mofdo_config(self, seed: int) -> MofdoConfig:
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


def _resolve_problems(names: list[str]) -> list[ProblemSpec]:
    specs = []
    for name in names:
        try:
            specs.append(get_problem(name))
        except ValueError:
            raise KeyError(name) from None
    return specs


def _write_trace(path: Path, values, formatter) -> None:
    lines = [f"# iterations={len(values)}"]
    lines.extend(formatter(v) for v in values)
    path.write_text("\n".join(lines) + "\n")


def _config_echo(config: ExperimentConfig) -> list[str]:
    rate = "2/dim" if config.mutation_rate is None else format_real(config.mutation_rate)
    return [
        "# mofdo experiment",
        f"# format={config.output_format}",
        "# config"
        f" runs={config.runs}"
        f" base_seed={config.base_seed}"
        f" iterations={config.iterations}"
        f" population={config.population_size}"
        f" archive={config.archive_capacity}"
        f" wf={config.weight_factor}"
        f" grid_divisions={config.grid_divisions}"
        f" leader_pressure={format_real(config.leader_pressure)}"
        f" delete_pressure={format_real(config.delete_pressure)}"
        f" inflation={format_real(config.grid_inflation)}"
        f" mutation_index={format_real(config.mutation_index)}"
        f" mutation_rate={rate}"
        f" ref_points={config.ref_points}",
        f"# problems {','.join(config.problems)}",
    ]


def run_experiment(config: ExperimentConfig) -> int:
    """Execute the experiment; returns a process exit code."""
    try:
        specs = _resolve_problems(config.problems)
    except KeyError as exc:
        print(f"error: unknown problem {exc.args[0]!r}; "
              f"available: {', '.join(available_problems())}", file=sys.stderr)
        return EXIT_UNKNOWN_PROBLEM

    out = config.output_dir
    try:
        out.mkdir(parents=True, exist_ok=True)
        probe = out / ".write-probe"
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        print(f"error: cannot write to {out}: {exc}", file=sys.stderr)
        return EXIT_UNWRITABLE_OUTPUT

    run_lines: list[str] = []
    summary_lines: list[str] = []
    for spec in specs:
        ref = reference_front(spec, config.ref_points)
        write_front_file(out / f"{spec.name}_reference.txt", ref.points)
        include_vars = spec.name == "welded_beam"
        final_igds = []
        for r in range(config.runs):
            seed = config.base_seed + r
            record = run(spec, config.mofdo_config(seed), ref)
            _write_run_files(out, spec.name, r, record, include_vars)
            final = record.igd_trace[-1] if record.igd_trace else igd(
                [s.objectives for s in record.final_archive], ref)
            final_igds.append(final)
            run_lines.append(
                f"run problem={spec.name} run={r} seed={seed}"
                f" final_igd={format_real(final)}"
                f" archive_size={len(record.final_archive)}"
            )
        s = summarize(final_igds)
        summary_lines.append(
            f"summary problem={spec.name}"
            f" igd_avg={format_real(s.mean)} igd_std={format_real(s.std)}"
            f" igd_best={format_real(s.best)} igd_worst={format_real(s.worst)}"
        )

    if config.output_format == "structured-text":
        doc = _config_echo(config) + run_lines + summary_lines
    else:
        doc = ["# problem igd_avg igd_std igd_best igd_worst"]
        doc.extend(line.replace("summary problem=", "").replace(" igd_avg=", " ")
                   .replace(" igd_std=", " ").replace(" igd_best=", " ")
                   .replace(" igd_worst=", " ") for line in summary_lines)
    (out / "experiment.txt").write_text("\n".join(doc) + "\n")
    return EXIT_OK


def _write_run_files(out: Path, name: str, run_index: int, record: RunRecord,
                     include_vars: bool) -> None:
    stem = f"{name}_run{run_index:03d}"
    objectives = [s.objectives for s in record.final_archive]
    positions = [s.position for s in record.final_archive] if include_vars else None
    write_front_file(out / f"{stem}_front.txt", objectives, positions)
    if record.igd_trace is not None:
        _write_trace(out / f"{stem}_igd.txt", record.igd_trace, format_real)
    _write_trace(out / f"{stem}_discovery.txt", record.discovery_trace, str)


def emit_reference_front(problem_name: str, n_points: int, path) -> None:
    """Write one problem's reference front in the table-text format."""
    spec = get_problem(problem_name)
    ref = reference_front(spec, n_points)
    write_front_file(path, ref.points)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mofdo",
        description="Run seeded multi-objective optimization experiments.",
    )
    parser.add_argument("--problem", required=True,
                        help="comma-separated problem names, e.g. zdt1,welded_beam")
    parser.add_argument("--runs", type=int, default=1)
    parser.add_argument("--iterations", type=int, default=500)
    parser.add_argument("--pop", type=int, default=100, dest="population")
    parser.add_argument("--archive", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--wf", type=int, choices=(0, 1), default=0)
    parser.add_argument("--grid-divisions", type=int, default=7)
    parser.add_argument("--leader-pressure", type=float, default=2.0)
    parser.add_argument("--delete-pressure", type=float, default=2.0)
    parser.add_argument("--inflation", type=float, default=1.0)
    parser.add_argument("--mutation-index", type=float, default=5.0)
    parser.add_argument("--mutation-rate", type=float, default=None,
                        help="per-variable mutation probability (default 1/dimension)")
    parser.add_argument("--ref-points", type=int, default=1000)
    parser.add_argument("--out", default="mofdo-results")
    parser.add_argument("--emit-reference", action="store_true",
                        help="only write reference fronts for the named problems")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    names = [n.strip() for n in args.problem.split(",") if n.strip()]
    config = ExperimentConfig(
        problems=names,
        runs=args.runs,
        base_seed=args.seed,
        iterations=args.iterations,
        population_size=args.population,
        archive_capacity=args.archive,
        weight_factor=args.wf,
        grid_divisions=args.grid_divisions,
        leader_pressure=args.leader_pressure,
        delete_pressure=args.delete_pressure,
        grid_inflation=args.inflation,
        mutation_index=args.mutation_index,
        mutation_rate=args.mutation_rate,
        ref_points=args.ref_points,
        output_dir=Path(args.out),
    )
    if args.emit_reference:
        return _emit_references(config)
    return run_experiment(config)


def _emit_references(config: ExperimentConfig) -> int:
    try:
        specs = _resolve_problems(config.problems)
    except KeyError as exc:
        print(f"error: unknown problem {exc.args[0]!r}; "
              f"available: {', '.join(available_problems())}", file=sys.stderr)
        return EXIT_UNKNOWN_PROBLEM
    out = config.output_dir
    try:
        out.mkdir(parents=True, exist_ok=True)
        for spec in specs:
            ref = reference_front(spec, config.ref_points)
            write_front_file(out / f"{spec.name}_reference.txt", ref.points)
    except OSError as exc:
        print(f"error: cannot write to {out}: {exc}", file=sys.stderr)
        return EXIT_UNWRITABLE_OUTPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
