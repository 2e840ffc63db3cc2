"""Shared fixtures for mechanism tests."""

import math
from collections.abc import Callable

import numpy as np
import pytest
from scipy.optimize import linprog

from core.enums import SolveStatus
from geometry.locations import LocationSet, build_grid
from geometry.prior import uniform_prior
from lp.program import assemble
from lp.solve import solve_builtin
from mechanism.channel import Mechanism
from spanner.constraints import ConstraintSet, exact_constraints, reduced_constraints
from spanner.dilation import dilation
from spanner.edges import build_edges

EPSILON = math.log(2) / 2

Solver = Callable[[LocationSet, ConstraintSet], tuple[Mechanism, float]]


def _solve(locs: LocationSet, cs: ConstraintSet) -> tuple[Mechanism, float]:
    lp = assemble(locs, uniform_prior(len(locs)), cs)
    solution, report = solve_builtin(lp)
    assert report.status == SolveStatus.OPTIMAL
    assert solution is not None and report.objective_value is not None
    return Mechanism.from_solution(solution, locs, cs.epsilon), report.objective_value


@pytest.fixture
def solve() -> Solver:
    """Return a helper that solves a constraint set under the uniform prior."""
    return _solve


@pytest.fixture
def reduced_solver(solve: Solver) -> Callable[[LocationSet, float], tuple[Mechanism, float]]:
    """Return a helper that builds and solves the reduced LP at radius R with the exact dilation."""

    def run(locs: LocationSet, radius: float) -> tuple[Mechanism, float]:
        edges = build_edges(locs, radius)
        return solve(locs, reduced_constraints(locs, edges, dilation(locs, edges).delta, EPSILON))

    return run


@pytest.fixture
def exact_solver(solve: Solver) -> Callable[[LocationSet], tuple[Mechanism, float]]:
    """Return a helper that builds and solves the exact LP."""

    def run(locs: LocationSet) -> tuple[Mechanism, float]:
        return solve(locs, exact_constraints(locs, EPSILON))

    return run


@pytest.fixture
def pair() -> LocationSet:
    """Create two locations one unit apart."""
    return build_grid(1, 2, 1.0)


@pytest.fixture
def grid3() -> LocationSet:
    """Create a 3x3 unit grid."""
    return build_grid(3, 3, 1.0)


@pytest.fixture
def exact_oracle() -> Callable[[LocationSet], float]:
    """Return a helper that solves the exact LP with scipy's HiGHS, for grids beyond the builtin exact range."""

    def run(locs: LocationSet) -> float:
        lp = assemble(locs, uniform_prior(len(locs)), exact_constraints(locs, EPSILON))
        result = linprog(
            lp.objective,
            A_ub=lp.ineq_matrix,
            b_ub=np.zeros(lp.num_ineq_rows),
            A_eq=lp.eq_matrix,
            b_eq=np.ones(lp.num_eq_rows),
            bounds=(0, None),
            method="highs",
        )
        assert result.status == 0
        return float(result.fun)

    return run
