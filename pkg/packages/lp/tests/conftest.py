"""Shared fixtures for lp tests."""

import math

import pytest

from geometry.locations import build_grid
from geometry.prior import uniform_prior
from lp.program import LinearProgram, assemble
from spanner.constraints import exact_constraints, reduced_constraints
from spanner.dilation import dilation
from spanner.edges import build_edges


@pytest.fixture
def pair_lp() -> LinearProgram:
    """Create the exact LP of two locations one unit apart with epsilon = ln 2."""
    locs = build_grid(1, 2, 1.0)
    return assemble(locs, uniform_prior(2), exact_constraints(locs, math.log(2)))


@pytest.fixture
def grid3_reduced_lp() -> LinearProgram:
    """Create the reduced LP of a 3x3 grid with R = 1 and its exact dilation."""
    locs = build_grid(3, 3, 1.0)
    edges = build_edges(locs, 1.0)
    cs = reduced_constraints(locs, edges, dilation(locs, edges).delta, math.log(2) / 2)
    return assemble(locs, uniform_prior(9), cs)


@pytest.fixture
def grid3_exact_lp() -> LinearProgram:
    """Create the exact LP of a 3x3 grid."""
    locs = build_grid(3, 3, 1.0)
    return assemble(locs, uniform_prior(9), exact_constraints(locs, math.log(2) / 2))
