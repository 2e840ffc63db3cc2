"""Tests for exact dilation and the implication certificate."""

import math

import numpy as np
import pytest

from core.errors import DisconnectedGraphError
from geometry.locations import LocationSet, build_grid
from spanner.dilation import dilation, implication_certificate
from spanner.edges import all_pairs_edges, build_edges

EPSILON = math.log(2) / 2


def floyd_warshall(locs: LocationSet, radius: float) -> np.ndarray:
    """Independent all-pairs shortest paths over edges no longer than ``radius``."""
    coords = locs.coords
    dist = np.sqrt(((coords[:, None, :] - coords[None, :, :]) ** 2).sum(axis=-1))
    lengths = np.where(dist <= radius, dist, np.inf)
    np.fill_diagonal(lengths, 0.0)
    for k in range(len(locs)):
        lengths = np.minimum(lengths, lengths[:, k][:, np.newaxis] + lengths[k, :][np.newaxis, :])
    return lengths


def oracle_dilation(locs: LocationSet, radius: float) -> float:
    """Dilation read off the independent shortest-path table."""
    coords = locs.coords
    dist = np.sqrt(((coords[:, None, :] - coords[None, :, :]) ** 2).sum(axis=-1))
    off = ~np.eye(len(locs), dtype=bool)
    return float((floyd_warshall(locs, radius)[off] / dist[off]).max())


class TestDilation:
    """Tests for the exact dilation."""

    def test_all_pairs_is_one(self, grid3: LocationSet) -> None:
        """Verify direct edges everywhere give delta = 1 exactly."""
        result = dilation(grid3, all_pairs_edges(grid3))
        assert result.delta == 1.0

    def test_axis_grid(self, grid3: LocationSet) -> None:
        """Verify the 3x3 axis grid stretches the unit diagonal to 2."""
        result = dilation(grid3, build_edges(grid3, 1.0))
        assert result.delta == pytest.approx(math.sqrt(2), abs=1e-9)
        assert result.witness == (0, 4)
        a, b = result.witness
        assert result.sp_table[a, b] == pytest.approx(2.0, abs=1e-12)

    def test_king_grid_matches_oracle(self) -> None:
        """Verify the 8x8 king-move graph against an independent Floyd-Warshall."""
        grid = build_grid(8, 8, 1.0)
        result = dilation(grid, build_edges(grid, 1.98))
        assert result.delta == pytest.approx(oracle_dilation(grid, 1.98), abs=1e-9)
        assert result.delta == pytest.approx((4 + 3 * math.sqrt(2)) / math.sqrt(58), abs=1e-9)

    def test_king_grid_below_closed_form(self) -> None:
        """Verify the finite grid approaches but never exceeds sqrt(4 - 2 sqrt(2))."""
        grid = build_grid(8, 8, 1.0)
        delta = dilation(grid, build_edges(grid, 1.98)).delta
        bound = math.sqrt(4 - 2 * math.sqrt(2))
        assert delta <= bound
        assert bound - delta < 1e-4

    def test_sp_table_matches_oracle(self) -> None:
        """Verify every shortest-path entry against the independent oracle."""
        grid = build_grid(5, 4, 1.0)
        result = dilation(grid, build_edges(grid, 2.3))
        np.testing.assert_allclose(result.sp_table, floyd_warshall(grid, 2.3), atol=1e-9)

    def test_invariants(self) -> None:
        """Verify sp <= delta * d everywhere and the witness attains delta."""
        grid = build_grid(5, 5, 1.0)
        result = dilation(grid, build_edges(grid, 1.42))
        dist = grid.distance_matrix()
        off = ~np.eye(len(grid), dtype=bool)
        assert np.all(result.sp_table[off] <= result.delta * dist[off] + 1e-9)
        a, b = result.witness or (0, 0)
        assert result.sp_table[a, b] == pytest.approx(result.delta * dist[a, b], abs=1e-9)
        assert result.delta >= 1 - 1e-12

    def test_monotone_in_edges(self) -> None:
        """Verify adding edges never increases the dilation."""
        grid = build_grid(5, 5, 1.0)
        deltas = [dilation(grid, build_edges(grid, r)).delta for r in (1.0, 1.42, 1.98, 2.3, 2.97)]
        assert all(later <= earlier + 1e-9 for earlier, later in zip(deltas, deltas[1:]))

    def test_witness_path(self, grid3: LocationSet) -> None:
        """Verify the reconstructed witness path has the shortest-path length."""
        result = dilation(grid3, build_edges(grid3, 1.0))
        a, b = result.witness or (0, 0)
        route = result.path(a, b)
        assert route[0] == a and route[-1] == b
        length = sum(grid3.distance_matrix()[u, v] for u, v in zip(route, route[1:]))
        assert length == pytest.approx(result.sp_table[a, b])

    def test_summary(self, grid3: LocationSet) -> None:
        """Verify the serializable summary names ids."""
        edges = build_edges(grid3, 1.0)
        summary = dilation(grid3, edges).summary(grid3, edges)
        assert summary.witness == ("0_0", "1_1")
        assert summary.witness_path[0] == "0_0" and summary.witness_path[-1] == "1_1"
        assert len(summary.witness_path) == 3
        assert summary.edges == 24

    def test_disconnected(self, grid3: LocationSet) -> None:
        """Verify a radius below the spacing reports two unreachable locations."""
        with pytest.raises(DisconnectedGraphError, match="no path from 0_0 to 0_1"):
            dilation(grid3, build_edges(grid3, 0.5))

    def test_disconnected_components(self) -> None:
        """Verify two separate clusters are reported as disconnected."""
        locs = LocationSet(["a", "b", "c", "d"], [(0, 0), (1, 0), (10, 0), (11, 0)])
        with pytest.raises(DisconnectedGraphError) as exc_info:
            dilation(locs, build_edges(locs, 1.5))
        assert (exc_info.value.source, exc_info.value.target) == ("a", "c")

    def test_single_location(self) -> None:
        """Verify one location has delta 1 and no witness."""
        grid = build_grid(1, 1, 1.0)
        result = dilation(grid, build_edges(grid, 1.0))
        assert result.delta == 1.0
        assert result.witness is None


class TestImplicationCertificate:
    """Tests for the chained-constraint implication check."""

    def test_all_pairs_tight(self, grid3: LocationSet) -> None:
        """Verify delta = 1 over all pairs is sound and tight on every pair."""
        edges = all_pairs_edges(grid3)
        report = implication_certificate(grid3, edges, dilation(grid3, edges), EPSILON)
        assert report.sound
        assert report.max_violation <= 1e-12
        assert report.tight_pairs == report.pairs_checked == 72

    def test_axis_grid_tight_at_witness(self, grid3: LocationSet) -> None:
        """Verify the axis grid is sound with the chained exponent tight on the unit diagonal."""
        edges = build_edges(grid3, 1.0)
        dil = dilation(grid3, edges)
        report = implication_certificate(grid3, edges, dil, EPSILON)
        assert report.sound
        assert report.max_violation <= 1e-9
        chained = EPSILON / dil.delta * dil.sp_table[0, 4]
        assert chained == pytest.approx(EPSILON * math.sqrt(2), abs=1e-12)

    def test_corrupted_delta_reports_witness(self, grid3: LocationSet) -> None:
        """Verify shrinking delta by 10% breaks the certificate at the witness."""
        edges = build_edges(grid3, 1.0)
        dil = dilation(grid3, edges)
        report = implication_certificate(grid3, edges, dil, EPSILON, delta=dil.delta * 0.9)
        assert not report.sound
        assert ("0_0", "1_1") in [(a, b) for a, b, _, _ in report.violations]
        assert report.max_violation > 1e-3

    @pytest.mark.parametrize("radius", [1.0, 1.42, 1.98, 2.3, 2.97])
    def test_sound_on_grids(self, radius: float) -> None:
        """Verify the exact dilation is always sound: chained path sums never exceed direct distances."""
        grid = build_grid(6, 6, 1.0)
        edges = build_edges(grid, radius)
        report = implication_certificate(grid, edges, dilation(grid, edges), EPSILON)
        assert report.sound
        assert report.pairs_checked == 36 * 35

    def test_rejects_nonpositive_epsilon(self, grid3: LocationSet) -> None:
        """Verify epsilon must be positive."""
        edges = build_edges(grid3, 1.0)
        with pytest.raises(ValueError, match="epsilon"):
            implication_certificate(grid3, edges, dilation(grid3, edges), 0.0)
