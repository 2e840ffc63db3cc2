"""Tests for spanner edge construction."""

import logging

import numpy as np
import pytest

from geometry.locations import LocationSet, build_grid
from spanner.edges import all_pairs_edges, build_edges


class TestBuildEdges:
    """Tests for build_edges."""

    def test_axis_neighbours(self, grid3: LocationSet) -> None:
        """Verify R = 1 keeps the 12 axis-adjacent pairs in both directions."""
        edges = build_edges(grid3, 1.0)
        assert len(edges) == 24
        assert np.all(edges.lengths == 1.0)

    def test_with_diagonals(self, grid3: LocationSet) -> None:
        """Verify R = 1.98 adds the 8 cell diagonals."""
        edges = build_edges(grid3, 1.98)
        assert len(edges) == 40
        assert int(np.count_nonzero(edges.lengths > 1.0)) == 16

    def test_all_pairs(self, grid3: LocationSet) -> None:
        """Verify a radius above the diameter yields n (n - 1) edges."""
        assert len(build_edges(grid3, 10.0)) == 72
        assert len(all_pairs_edges(grid3)) == 72

    def test_closed_under_reversal(self) -> None:
        """Verify every edge appears in both directions."""
        edges = build_edges(build_grid(4, 5, 1.0), 2.3)
        pairs = set(edges.pairs())
        assert all((b, a) in pairs for a, b in pairs)

    def test_sorted_and_within_radius(self) -> None:
        """Verify edges are sorted by (source, target) and no longer than R."""
        edges = build_edges(build_grid(4, 4, 1.0), 2.0)
        assert edges.pairs() == sorted(edges.pairs())
        assert np.all(edges.lengths <= 2.0)
        assert np.all(edges.sources != edges.targets)

    def test_thirteen_grid_count(self) -> None:
        """Verify the 13x13 grid with R = 1.98 has 1200 directed edges."""
        assert len(build_edges(build_grid(13, 13, 1.0), 1.98)) == 1200

    def test_empty_is_legal(self, grid3: LocationSet) -> None:
        """Verify a radius below the spacing gives no edges rather than an error."""
        assert len(build_edges(grid3, 0.5)) == 0

    def test_rejects_nonpositive_radius(self, grid3: LocationSet) -> None:
        """Verify R <= 0 is rejected."""
        with pytest.raises(ValueError, match="positive"):
            build_edges(grid3, 0.0)

    def test_zero_radius_single_location(self) -> None:
        """Verify R = 0 is accepted for one location, where there is nothing to connect."""
        edges = build_edges(build_grid(1, 1, 1.0), 0.0)
        assert len(edges) == 0
        assert edges.radius == 0.0

    def test_density_warning(self, grid3: LocationSet, caplog: pytest.LogCaptureFixture) -> None:
        """Verify R < 2 rho on a grid is flagged and logged."""
        with caplog.at_level(logging.WARNING, logger="spanner.edges"):
            edges = build_edges(grid3, 1.0)
        assert edges.below_density_threshold
        assert "below 2 rho" in caplog.text

    def test_no_warning_above_threshold(self, grid3: LocationSet) -> None:
        """Verify R >= 2 rho is not flagged."""
        assert not build_edges(grid3, 1.98).below_density_threshold

    def test_no_rho_for_point_cloud(self) -> None:
        """Verify point clouds without rho are never flagged."""
        cloud = LocationSet(["a", "b"], [(0, 0), (3, 1)])
        assert not build_edges(cloud, 0.1).below_density_threshold
        assert build_edges(cloud, 0.1, rho=1.0).below_density_threshold
