"""Shared fixtures for CLI tests."""

from collections.abc import Callable
from pathlib import Path

import pytest

from geometry.loader import save_locations
from geometry.locations import build_grid


@pytest.fixture
def grid_file(tmp_path: Path) -> Callable[[int, int], Path]:
    """Return a helper writing a unit grid locations CSV."""

    def write(rows: int, cols: int) -> Path:
        path = tmp_path / f"grid{rows}x{cols}.csv"
        save_locations(build_grid(rows, cols, 1.0), path)
        return path

    return write


@pytest.fixture(autouse=True)
def _isolated_settings(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """Keep a developer's .env and GEOIND_ variables out of CLI runs."""
    monkeypatch.chdir(tmp_path)
    for name in ("GEOIND_EPSILON", "GEOIND_VERIFY_TOL", "GEOIND_MAX_ITERS", "GEOIND_PIVOT_RULE", "GEOIND_DEGENERATE_PIVOT_LIMIT", "GEOIND_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
