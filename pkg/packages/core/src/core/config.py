"""Application settings via pydantic-settings."""

import math

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from core.enums import PivotRule


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(env_prefix="GEOIND_", env_file=".env", env_file_encoding="utf-8", extra="ignore")

    # Privacy
    epsilon: float = Field(default=math.log(2) / 2, gt=0, description="Privacy level per unit distance")
    verify_tol: float = Field(default=1e-7, ge=0, description="Log-space tolerance of the brute-force privacy check")

    # Builtin solver
    feas_tol: float = Field(default=1e-9, gt=0)
    duality_tol: float = Field(default=1e-7, gt=0)
    reduced_cost_tol: float = Field(default=1e-11, gt=0)
    max_iters: int = Field(default=200_000, ge=1)
    refactor_interval: int = Field(default=50, ge=1)
    pivot_rule: PivotRule = PivotRule.DEVEX
    degenerate_pivot_limit: int = Field(default=50, ge=1)

    # Builtin solver range (number of locations)
    builtin_exact_max_locations: int = 16
    builtin_reduced_max_locations: int = 36

    # Logging
    log_level: str = "INFO"
