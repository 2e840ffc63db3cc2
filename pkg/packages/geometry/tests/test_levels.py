"""Tests for privacy-level and radius conversions."""

import math

import pytest

from geometry.levels import epsilon_for_level, resolve_radius


class TestEpsilonForLevel:
    """Tests for epsilon_for_level."""

    def test_level_two_within_two(self) -> None:
        """Verify level 2 within radius 2 is ln(2) / 2."""
        assert epsilon_for_level(2.0, 2.0) == pytest.approx(math.log(2) / 2)

    @pytest.mark.parametrize(("level", "radius"), [(1.0, 2.0), (0.5, 2.0), (2.0, 0.0)])
    def test_rejects_bad_arguments(self, level: float, radius: float) -> None:
        """Verify levels at most 1 and nonpositive radii are rejected."""
        with pytest.raises(ValueError):
            epsilon_for_level(level, radius)


class TestResolveRadius:
    """Tests for resolve_radius."""

    def test_radius_passes_through(self) -> None:
        """Verify an explicit radius is returned unchanged."""
        assert resolve_radius(1.98, None, None) == 1.98

    def test_ratio_times_covering_radius(self) -> None:
        """Verify c = 2.8 on a unit grid gives R = 2.8 / sqrt(2)."""
        assert resolve_radius(None, 2.8, 1 / math.sqrt(2)) == pytest.approx(2.8 / math.sqrt(2))

    def test_single_location(self) -> None:
        """Verify covering radius 0, a single location, resolves to R = 0."""
        assert resolve_radius(None, 2.8, 0.0) == 0.0

    def test_ratio_needs_covering_radius(self) -> None:
        """Verify c without a covering radius asks for rho."""
        with pytest.raises(ValueError, match="supply rho explicitly"):
            resolve_radius(None, 2.8, None)

    def test_exactly_one(self) -> None:
        """Verify giving both or neither of radius and c is rejected."""
        with pytest.raises(ValueError, match="exactly one"):
            resolve_radius(1.0, 2.8, 1.0)
        with pytest.raises(ValueError, match="exactly one"):
            resolve_radius(None, None, 1.0)

    def test_low_ratio_warns(self, caplog: pytest.LogCaptureFixture) -> None:
        """Verify c below 2 logs the density warning."""
        with caplog.at_level("WARNING"):
            assert resolve_radius(None, 1.5, 1.0) == 1.5
        assert "density hypothesis" in caplog.text
