"""Builtin solve of a mechanism linear program with an optimality certificate."""

from __future__ import annotations

import logging
import time

import numpy as np

from core.enums import SolverKind, SolveStatus
from core.errors import SolverError
from core.schemas import SolveReport, SolverOptions
from lp.program import LinearProgram, check_feasibility
from lp.simplex import DualRevisedSimplex

logger = logging.getLogger(__name__)

UNUSED_REPORT_TOL = 1e-12


def _clean(lp: LinearProgram, multipliers: np.ndarray, basis: np.ndarray, slack_offset: int) -> np.ndarray:
    """Turn simplex multipliers into a mechanism vector with round-off removed."""
    p = -multipliers
    basic_slacks = basis[basis >= slack_offset] - slack_offset
    p[basic_slacks] = 0.0
    np.maximum(p, 0.0, out=p)
    matrix = p.reshape(lp.n, lp.n)
    unused = matrix.max(axis=0) <= UNUSED_REPORT_TOL
    matrix[:, unused] = 0.0
    return matrix.ravel()


def solve_builtin(lp: LinearProgram, opts: SolverOptions | None = None) -> tuple[np.ndarray | None, SolveReport]:
    """Solve ``lp`` with the builtin dual revised simplex.

    Returns the mechanism vector in canonical variable order (None when no feasible point is available) and
    the solve report. An ``optimal`` status is only reported when the point satisfies every row within
    ``feas_tol`` and the duality gap is within ``duality_tol``; otherwise SolverError is raised.
    """
    opts = opts or SolverOptions()
    start = time.perf_counter()

    if lp.n == 1:
        solution = np.ones(1)
        report = SolveReport(status=SolveStatus.OPTIMAL, objective_value=0.0, wall_time=time.perf_counter() - start, duality_gap=0.0, max_violation=0.0)
        return solution, report

    logger.info("Solving LP with %d variables and %d rows (pivot rule %s)", lp.num_variables, lp.num_rows, opts.pivot_rule.value)
    simplex = DualRevisedSimplex(lp.objective, lp.eq_matrix, lp.ineq_matrix, opts)
    result = simplex.solve()
    elapsed = time.perf_counter() - start

    if result.status == SolveStatus.INFEASIBLE:
        logger.error("Dual is unbounded: the mechanism LP has no feasible point")
        return None, SolveReport(status=SolveStatus.INFEASIBLE, iterations=result.iterations, wall_time=elapsed)

    solution = _clean(lp, result.multipliers, result.basis, result.slack_offset)
    violation = check_feasibility(lp, solution)
    objective = float(lp.objective @ solution)

    if result.status == SolveStatus.ITERATION_LIMIT:
        candidate = solution if violation <= opts.feas_tol else None
        return candidate, SolveReport(
            status=SolveStatus.ITERATION_LIMIT,
            objective_value=objective if candidate is not None else None,
            iterations=result.iterations,
            wall_time=elapsed,
            max_violation=violation,
        )

    gap = abs(objective - result.dual_objective)
    if violation > opts.feas_tol:
        raise SolverError(f"simplex optimum violates the LP rows by {violation:.3e} (tolerance {opts.feas_tol:.1e})")
    if gap > opts.duality_tol * (1.0 + abs(objective)):
        raise SolverError(f"duality gap {gap:.3e} exceeds tolerance {opts.duality_tol:.1e}")

    logger.info("Optimal objective %.12g after %d iterations in %.3fs", objective, result.iterations, elapsed)
    report = SolveReport(
        status=SolveStatus.OPTIMAL,
        objective_value=max(objective, 0.0),
        iterations=result.iterations,
        wall_time=elapsed,
        solver=SolverKind.BUILTIN,
        duality_gap=gap,
        max_violation=violation,
    )
    return solution, report
