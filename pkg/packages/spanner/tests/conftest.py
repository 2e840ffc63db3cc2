"""Shared fixtures for spanner tests."""

import pytest

from geometry.locations import LocationSet, build_grid


@pytest.fixture
def grid3() -> LocationSet:
    """Create a 3x3 unit grid."""
    return build_grid(3, 3, 1.0)


@pytest.fixture
def collinear() -> LocationSet:
    """Create three collinear points at 0, 1, 2."""
    return LocationSet(["p0", "p1", "p2"], [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)])
