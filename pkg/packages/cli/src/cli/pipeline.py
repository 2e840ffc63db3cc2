"""Mechanism build pipeline: locations -> constraints -> LP -> solve or export -> mechanism."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from core.config import Settings
from core.enums import ConstraintKind, SolveStatus
from core.errors import SolverError
from core.schemas import DilationSummary, RunConfig, SolveReport, SolverOptions
from geometry.levels import resolve_radius
from geometry.locations import LocationSet, covering_radius
from geometry.prior import Prior
from lp.lpfile import export_lp
from lp.program import LinearProgram, assemble
from lp.solve import solve_builtin
from mechanism.channel import Mechanism
from spanner.constraints import ConstraintSet, dump_constraints, exact_constraints, reduced_constraints
from spanner.dilation import dilation, implication_certificate
from spanner.edges import build_edges

logger = logging.getLogger(__name__)

OUT_OF_RANGE = "instance exceeds builtin solver range; use --solver export"


@dataclass(frozen=True)
class Reduction:
    """Constraint set of one instance with the spanner parameters it was built from."""

    constraints: ConstraintSet
    delta: float
    radius: float | None
    rho: float | None
    dilation: DilationSummary | None


@dataclass(frozen=True)
class BuildResult:
    """Everything one pipeline run produced."""

    reduction: Reduction
    lp: LinearProgram
    solution: np.ndarray | None
    report: SolveReport | None
    mechanism: Mechanism | None
    wall_time_s: float

    @property
    def rows(self) -> int:
        """Return the number of privacy rows."""
        return len(self.reduction.constraints)


def covering_radius_or_none(locs: LocationSet, rho: float | None) -> float | None:
    """Return ``rho`` when given, else the grid covering radius when the set is a grid."""
    if rho is not None:
        return rho
    if locs.spacing is None and len(locs) > 1:
        return None
    return covering_radius(locs)


class MechanismPipeline:
    """Orchestrate one mechanism build for a RunConfig."""

    def __init__(self, settings: Settings | None = None) -> None:
        self._settings = settings or Settings()
        self._options = SolverOptions.from_settings(self._settings)

    def check_range(self, n: int, mode: str) -> None:
        """Raise ValueError when the builtin solver is not meant for ``n`` locations in ``mode``."""
        limit = self._settings.builtin_exact_max_locations if mode == ConstraintKind.EXACT.value else self._settings.builtin_reduced_max_locations
        if n > limit:
            raise ValueError(f"{OUT_OF_RANGE} ({n} locations, {mode} limit {limit})")

    def reduce(self, locs: LocationSet, config: RunConfig) -> Reduction:
        """Build the exact or reduced constraint set named by ``config``."""
        if config.mode == ConstraintKind.EXACT.value:
            return Reduction(constraints=exact_constraints(locs, config.epsilon), delta=1.0, radius=None, rho=config.rho, dilation=None)

        rho = covering_radius_or_none(locs, config.rho)
        radius = resolve_radius(config.radius, config.c, rho)
        edges = build_edges(locs, radius, rho=rho)
        dil = dilation(locs, edges)
        delta = dil.delta if config.delta is None else config.delta
        if config.delta is not None:
            certificate = implication_certificate(locs, edges, dil, config.epsilon, delta=delta)
            if not certificate.sound:
                logger.warning("Fixed delta %.9g is below the exact dilation %.9g; the mechanism may violate privacy", delta, dil.delta)
        cs = reduced_constraints(locs, edges, delta, config.epsilon)
        return Reduction(constraints=cs, delta=delta, radius=radius, rho=rho, dilation=dil.summary(locs, edges))

    def run(self, locs: LocationSet, prior: Prior, config: RunConfig, reduction: Reduction | None = None) -> BuildResult:
        """Build constraints and the LP, then solve it or export it.

        ``reduction`` reuses constraints already built by ``reduce`` for the same locations and config.

        Raises
        ------
        ValueError
            If the instance is malformed, disconnected, or outside the builtin solver range.
        SolverError
            If the builtin solver does not reach a certified optimum.
        """
        start = time.monotonic()
        if config.solver == "builtin":
            self.check_range(len(locs), config.mode)

        if reduction is None:
            reduction = self.reduce(locs, config)
        if config.dump_constraints:
            dump_constraints(reduction.constraints, locs, Path(config.dump_constraints))
        lp = assemble(locs, prior, reduction.constraints)

        if config.solver == "export":
            if not config.lp_out:
                raise ValueError("export mode needs an LP output path (--lp-out)")
            export_lp(lp, Path(config.lp_out))
            return BuildResult(reduction=reduction, lp=lp, solution=None, report=None, mechanism=None, wall_time_s=time.monotonic() - start)

        solution, report = solve_builtin(lp, self._options)
        if report.status != SolveStatus.OPTIMAL or solution is None:
            raise SolverError(f"builtin solver stopped with status {report.status.value} after {report.iterations} iterations")
        mech = Mechanism.from_solution(solution, locs, config.epsilon)
        return BuildResult(reduction=reduction, lp=lp, solution=solution, report=report, mechanism=mech, wall_time_s=time.monotonic() - start)
