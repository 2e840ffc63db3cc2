"""Shared fixtures for geometry tests."""

from pathlib import Path

import pytest

from geometry.locations import LocationSet, build_grid


@pytest.fixture
def unit_grid() -> LocationSet:
    """Create a 3x3 unit grid."""
    return build_grid(3, 3, 1.0)


@pytest.fixture
def triangle() -> LocationSet:
    """Create three non-grid points forming a 3-4-5 triangle."""
    return LocationSet(["a", "b", "c"], [(0.0, 0.0), (3.0, 0.0), (3.0, 4.0)])


@pytest.fixture
def prior_csv(tmp_path: Path) -> Path:
    """Write a uniform prior over a 2x2 grid."""
    path = tmp_path / "prior.csv"
    path.write_text("id,prob\n0_0,0.25\n0_1,0.25\n1_0,0.25\n1_1,0.25\n")
    return path
