"""Shared fixtures for core tests."""

import math

import pytest

from core.schemas import RunConfig


@pytest.fixture
def reduced_config() -> RunConfig:
    """Create a reduced-mode run configuration on the canonical privacy level."""
    return RunConfig(mode="reduced", epsilon=math.log(2) / 2, c=2.8, locations="grid.csv", out="mech.json")


@pytest.fixture
def exact_config() -> RunConfig:
    """Create an exact-mode run configuration."""
    return RunConfig(mode="exact", epsilon=math.log(2), locations="two.csv")
