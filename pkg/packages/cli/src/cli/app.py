"""Argument parsing, logging setup, and exit-code mapping for ``geoind``."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from enum import IntEnum

from cli import commands
from core.config import Settings
from core.errors import SolverError

logger = logging.getLogger(__name__)

Command = Callable[[argparse.Namespace, Settings], int]


class ExitCode(IntEnum):
    """Process exit codes."""

    OK = 0
    VERIFY_FAILED = 1
    USAGE = 2
    SOLVER = 3


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _nonnegative_float(text: str) -> float:
    value = float(text)
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {text}")
    return value


def _delta(text: str) -> str:
    if text != "auto":
        value = float(text)
        if value < 1:
            raise argparse.ArgumentTypeError(f"delta must be 'auto' or at least 1, got {text}")
    return text


def _add_epsilon(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--epsilon", type=_positive_float, help="privacy level per unit distance")
    parser.add_argument("--level", type=float, help="indistinguishability level L, with --level-radius (epsilon = ln L / r)")
    parser.add_argument("--level-radius", type=_positive_float, help="radius r within which the level applies")


def _add_radius(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--radius", type=_positive_float, help="spanner radius R")
    group.add_argument("--c", type=_positive_float, help="spanner ratio c, R = c * rho")
    parser.add_argument("--rho", type=_nonnegative_float, help="covering radius for non-grid location files")


def build_parser() -> argparse.ArgumentParser:
    """Return the top-level parser with one subparser per command."""
    parser = argparse.ArgumentParser(prog="geoind", description="Build and check utility-optimal geo-indistinguishable mechanisms.")
    parser.add_argument("--log-level", help="logging level (default from GEOIND_LOG_LEVEL)")
    sub = parser.add_subparsers(dest="command", required=True)

    grid = sub.add_parser("build-grid", help="write a grid of locations")
    grid.add_argument("--rows", type=_positive_int, required=True)
    grid.add_argument("--cols", type=_positive_int, required=True)
    grid.add_argument("--spacing", type=_positive_float, default=1.0)
    grid.add_argument("--out", required=True)
    grid.set_defaults(handler=commands.cmd_build_grid)

    solve = sub.add_parser("solve", help="build a mechanism (exact or reduced constraints)")
    solve.add_argument("--config", help="RunConfig JSON; flags override its fields")
    solve.add_argument("--locations")
    solve.add_argument("--mode", choices=["exact", "reduced"])
    _add_epsilon(solve)
    _add_radius(solve)
    solve.add_argument("--delta", type=_delta, help="'auto' for the exact dilation, or a fixed value >= 1")
    solve.add_argument("--solver", choices=["builtin", "export"])
    solve.add_argument("--prior", help="id,prob CSV (default uniform)")
    solve.add_argument("--out", help="mechanism JSON")
    solve.add_argument("--report", help="report JSON")
    solve.add_argument("--lp-out", help="LP file written in export mode")
    solve.add_argument("--dump-constraints", help="CSV of the privacy rows")
    solve.add_argument("--import-solution", help="external solver solution for the exported LP of this instance")
    solve.set_defaults(handler=commands.cmd_solve)

    verify = sub.add_parser("verify", help="check a mechanism against every privacy triple")
    verify.add_argument("--mechanism", required=True)
    verify.add_argument("--locations", required=True)
    _add_epsilon(verify)
    verify.add_argument("--tol", type=_nonnegative_float, help="log-space tolerance (default from settings)")
    verify.add_argument("--report", help="privacy report JSON")
    verify.set_defaults(handler=commands.cmd_verify)

    dil = sub.add_parser("dilation", help="exact dilation of the spanner graph")
    dil.add_argument("--locations", required=True)
    _add_radius(dil)
    dil.set_defaults(handler=commands.cmd_dilation)

    sweep = sub.add_parser("sweep", help="benchmark sweep over grid sizes and spanner ratios")
    sweep.add_argument("--sizes", type=_positive_int, nargs="+", required=True, help="grid side lengths")
    sweep.add_argument("--c", type=_positive_float, nargs="+", required=True, help="spanner ratios")
    _add_epsilon(sweep)
    sweep.add_argument("--spacing", type=_positive_float, default=1.0)
    sweep.add_argument("--exact", action="store_true", help="add one exact instance per grid size")
    sweep.add_argument("--solver", choices=["builtin", "export"], default="builtin")
    sweep.add_argument("--lp-dir", help="directory for LP files in export mode")
    sweep.add_argument("--out", help="CSV path (default stdout)")
    sweep.add_argument("--omit-timing", action="store_true", help="leave wall_time_s empty")
    sweep.add_argument("--jobs", type=_positive_int, default=1)
    sweep.set_defaults(handler=commands.cmd_sweep)

    count = sub.add_parser("count", help="constraint counts without assembling the LP")
    count.add_argument("--locations")
    count.add_argument("--rows", type=_positive_int)
    count.add_argument("--cols", type=_positive_int)
    count.add_argument("--spacing", type=_positive_float, default=1.0)
    _add_radius(count)
    count.set_defaults(handler=commands.cmd_count)

    draw = sub.add_parser("sample", help="draw reported locations from a saved mechanism")
    draw.add_argument("--mechanism", required=True)
    draw.add_argument("--location", required=True, help="true location id")
    draw.add_argument("--seed", type=int, help="random seed (required unless --config has one)")
    draw.add_argument("--config", help="RunConfig JSON whose seed is used when --seed is absent")
    draw.add_argument("--count", type=_positive_int, default=1)
    draw.add_argument("--out", help="CSV of draws (default stdout)")
    draw.set_defaults(handler=commands.cmd_sample)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, run the command, and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    settings = Settings()
    logging.basicConfig(level=(args.log_level or settings.log_level).upper(), format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    handler: Command = args.handler
    try:
        return handler(args, settings)
    except SolverError as e:
        print(f"solver error: {e}", file=sys.stderr)  # noqa: T201
        return ExitCode.SOLVER
    except (ValueError, FileNotFoundError, IndexError) as e:
        print(f"error: {e}", file=sys.stderr)  # noqa: T201
        return ExitCode.USAGE


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())
