"""Implementations of the geoind subcommands."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any

import pandas as pd

from cli.pipeline import BuildResult, MechanismPipeline, covering_radius_or_none
from cli.sweep import run_sweep, sweep_tasks, write_sweep
from core.config import Settings
from core.schemas import RunConfig, SolveRunReport
from geometry.levels import epsilon_for_level, resolve_radius
from geometry.loader import load_locations, save_locations
from geometry.locations import LocationSet, build_grid
from geometry.prior import Prior, load_prior, uniform_prior
from lp.lpfile import import_solution
from lp.program import assemble
from mechanism.channel import Mechanism
from mechanism.sampling import sample
from mechanism.store import load_mechanism, save_mechanism
from mechanism.verify import verify_privacy
from spanner.constraints import exact_row_count, reduced_row_count
from spanner.dilation import dilation
from spanner.edges import build_edges

logger = logging.getLogger(__name__)


def resolve_epsilon(args: argparse.Namespace) -> float | None:
    """Return epsilon from ``--epsilon`` or ``--level``/``--level-radius``, or None when neither is given."""
    if getattr(args, "level", None) is not None:
        if args.epsilon is not None:
            raise ValueError("give either --epsilon or --level, not both")
        if args.level_radius is None:
            raise ValueError("--level needs --level-radius")
        return epsilon_for_level(args.level, args.level_radius)
    return args.epsilon


def load_run_config(path: Path) -> RunConfig:
    """Read a RunConfig JSON file."""
    if not path.exists():
        raise FileNotFoundError(f"config file not found: {path}")
    return RunConfig.model_validate_json(path.read_text(encoding="utf-8"))


def run_config_from_args(args: argparse.Namespace, settings: Settings) -> RunConfig:
    """Merge an optional ``--config`` JSON with explicit flags; flags win."""
    base: dict[str, Any] = {}
    if args.config:
        base = load_run_config(Path(args.config)).model_dump(exclude_none=True)

    overrides: dict[str, Any] = {
        "mode": args.mode,
        "epsilon": resolve_epsilon(args),
        "radius": args.radius,
        "c": args.c,
        "rho": args.rho,
        "solver": args.solver,
        "locations": args.locations,
        "prior": args.prior,
        "out": args.out,
        "report": args.report,
        "lp_out": args.lp_out,
        "dump_constraints": args.dump_constraints,
    }
    overrides = {key: value for key, value in overrides.items() if value is not None}
    if "radius" in overrides:
        base.pop("c", None)
    if "c" in overrides:
        base.pop("radius", None)
    if args.delta is not None:
        overrides["delta"] = None if args.delta == "auto" else float(args.delta)

    merged = {**base, **overrides}
    if merged.get("mode") == "exact":
        for key in ("radius", "c", "delta"):
            if key in base and key not in overrides:
                merged.pop(key)
    merged.setdefault("epsilon", settings.epsilon)
    return RunConfig.model_validate(merged)


def _load_instance(config: RunConfig) -> tuple[LocationSet, Prior]:
    if not config.locations:
        raise ValueError("no locations file given (--locations)")
    locs = load_locations(Path(config.locations))
    prior = load_prior(Path(config.prior), locs) if config.prior else uniform_prior(len(locs))
    return locs, prior


def _run_report(config: RunConfig, result: BuildResult, status: str) -> SolveRunReport:
    reduction = result.reduction
    echoed = config.model_copy(update={"delta": reduction.delta if config.mode == "reduced" else None, "rho": reduction.rho})
    report = result.report
    return SolveRunReport(
        n=result.lp.n,
        mode=config.mode,
        R=reduction.radius,
        c=config.c,
        delta=reduction.delta,
        rows=result.rows,
        objective=report.objective_value if report is not None else None,
        iterations=report.iterations if report is not None else 0,
        wall_time_s=result.wall_time_s,
        status=status,
        config=echoed,
    )


def cmd_build_grid(args: argparse.Namespace, settings: Settings) -> int:  # pylint: disable=unused-argument
    """Write a rows x cols grid as a locations CSV."""
    locs = build_grid(args.rows, args.cols, args.spacing)
    save_locations(locs, Path(args.out))
    print(f"Wrote {len(locs)} locations to {args.out}")  # noqa: T201
    return 0


def cmd_solve(args: argparse.Namespace, settings: Settings) -> int:
    """Build a mechanism with the builtin solver, export its LP, or import an external solution."""
    config = run_config_from_args(args, settings)
    locs, prior = _load_instance(config)
    pipeline = MechanismPipeline(settings)

    if args.import_solution:
        reduction = pipeline.reduce(locs, config)
        lp = assemble(locs, prior, reduction.constraints)
        solution, solve_report = import_solution(Path(args.import_solution), lp)
        mech = Mechanism.from_solution(solution, locs, config.epsilon)
        result = BuildResult(reduction=reduction, lp=lp, solution=solution, report=solve_report, mechanism=mech, wall_time_s=0.0)
    else:
        result = pipeline.run(locs, prior, config)

    if result.mechanism is not None and config.out:
        save_mechanism(result.mechanism, Path(config.out))
    status = "exported" if result.report is None else result.report.status.value
    run_report = _run_report(config, result, status)
    text = run_report.model_dump_json(indent=2)
    if config.report:
        report_path = Path(config.report)
        report_path.parent.mkdir(parents=True, exist_ok=True)
        report_path.write_text(text + "\n", encoding="utf-8")
    print(text)  # noqa: T201
    return 0


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    """Check a saved mechanism against the geo-indistinguishability inequality; exit 1 on violation."""
    mech = load_mechanism(Path(args.mechanism))
    locs = load_locations(Path(args.locations))
    epsilon = resolve_epsilon(args)
    tol = settings.verify_tol if args.tol is None else args.tol
    report = verify_privacy(mech, locs, mech.epsilon if epsilon is None else epsilon, tol)
    text = report.model_dump_json(indent=2)
    if args.report:
        Path(args.report).write_text(text + "\n", encoding="utf-8")
    print(text)  # noqa: T201
    if not report.satisfied:
        print(f"Privacy violated at triple {report.worst_triple}", file=sys.stderr)  # noqa: T201
        return 1
    return 0


def cmd_dilation(args: argparse.Namespace, settings: Settings) -> int:  # pylint: disable=unused-argument
    """Print the exact dilation of the spanner graph within R as JSON."""
    locs = load_locations(Path(args.locations))
    rho = covering_radius_or_none(locs, args.rho)
    radius = resolve_radius(args.radius, args.c, rho)
    edges = build_edges(locs, radius, rho=rho)
    summary = dilation(locs, edges).summary(locs, edges)
    print(summary.model_dump_json(indent=2))  # noqa: T201
    return 0


def cmd_count(args: argparse.Namespace, settings: Settings) -> int:  # pylint: disable=unused-argument
    """Print exact and reduced constraint counts without assembling any LP."""
    if args.locations:
        locs = load_locations(Path(args.locations))
    elif args.rows is not None and args.cols is not None:
        locs = build_grid(args.rows, args.cols, args.spacing)
    else:
        raise ValueError("give --locations or both --rows and --cols")
    counts: dict[str, Any] = {"n": len(locs), "exact_rows": exact_row_count(len(locs))}
    if args.radius is not None or args.c is not None:
        rho = covering_radius_or_none(locs, args.rho)
        radius = resolve_radius(args.radius, args.c, rho)
        edges = build_edges(locs, radius, rho=rho)
        counts.update({"R": radius, "edges": len(edges), "reduced_rows": reduced_row_count(edges)})
    print(json.dumps(counts, indent=2))  # noqa: T201
    return 0


def cmd_sample(args: argparse.Namespace, settings: Settings) -> int:  # pylint: disable=unused-argument
    """Draw reported locations for one true location from a saved mechanism.

    The seed comes from ``--seed``, else from the ``seed`` field of ``--config``; one of them is required.
    """
    seed = args.seed
    if seed is None and args.config:
        seed = load_run_config(Path(args.config)).seed
    if seed is None:
        raise ValueError("sampling needs a seed: give --seed or a --config with a seed")
    mech = load_mechanism(Path(args.mechanism))
    if args.location not in mech.ids:
        raise ValueError(f"unknown location id {args.location}")
    draws = sample(mech, mech.ids.index(args.location), seed, args.count)
    reported = [mech.ids[k] for k in draws.tolist()]
    if args.out:
        frame = pd.DataFrame({"draw": range(len(reported)), "reported": reported})
        frame.to_csv(Path(args.out), index=False, lineterminator="\n")
        print(f"Wrote {len(reported)} draws to {args.out}")  # noqa: T201
    else:
        print("\n".join(reported))  # noqa: T201
    return 0


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    """Run the benchmark sweep and write its CSV."""
    epsilon = resolve_epsilon(args)
    tasks = sweep_tasks(
        args.sizes,
        args.c,
        settings.epsilon if epsilon is None else epsilon,
        exact=args.exact,
        spacing=args.spacing,
        solver=args.solver,
        lp_dir=args.lp_dir,
    )
    if args.solver == "export" and not args.lp_dir:
        raise ValueError("export mode needs an LP directory (--lp-dir)")
    rows = run_sweep(tasks, settings, jobs=args.jobs)
    text = write_sweep(rows, Path(args.out) if args.out else None, omit_timing=args.omit_timing)
    if args.out:
        print(f"Wrote {len(rows)} sweep rows to {args.out}")  # noqa: T201
    else:
        print(text, end="")  # noqa: T201
    return 0
