"""Tests for application configuration via pydantic-settings."""

import math
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from core.config import Settings
from core.enums import PivotRule
from core.schemas import SolverOptions


class TestSettings:
    """Tests for the Settings model defaults and env overrides."""

    def test_default_settings(self) -> None:
        """Verify all default setting values."""
        settings = Settings()
        assert settings.epsilon == pytest.approx(math.log(2) / 2)
        assert settings.verify_tol == 1e-7
        assert settings.feas_tol == 1e-9
        assert settings.duality_tol == 1e-7
        assert settings.max_iters == 200_000
        assert settings.refactor_interval == 50
        assert settings.pivot_rule == PivotRule.DEVEX
        assert settings.degenerate_pivot_limit == 50
        assert settings.builtin_exact_max_locations == 16
        assert settings.builtin_reduced_max_locations == 36
        assert settings.log_level == "INFO"

    def test_env_override(self) -> None:
        """Verify environment variables override defaults."""
        with patch.dict("os.environ", {"GEOIND_EPSILON": "0.5", "GEOIND_PIVOT_RULE": "dantzig", "GEOIND_MAX_ITERS": "10"}):
            settings = Settings()
            assert settings.epsilon == 0.5
            assert settings.pivot_rule == PivotRule.DANTZIG
            assert settings.max_iters == 10

    def test_rejects_nonpositive_epsilon(self) -> None:
        """Verify a zero privacy level is rejected at load time."""
        with patch.dict("os.environ", {"GEOIND_EPSILON": "0"}):
            with pytest.raises(ValidationError):
                Settings()

    def test_solver_options_from_settings(self) -> None:
        """Verify solver options mirror the solver section of the settings."""
        with patch.dict("os.environ", {"GEOIND_FEAS_TOL": "1e-8", "GEOIND_REFACTOR_INTERVAL": "7", "GEOIND_DEGENERATE_PIVOT_LIMIT": "3"}):
            options = SolverOptions.from_settings(Settings())
        assert options.feas_tol == 1e-8
        assert options.refactor_interval == 7
        assert options.degenerate_pivot_limit == 3
        assert options.pivot_rule == PivotRule.DEVEX
