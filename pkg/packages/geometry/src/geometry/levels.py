"""Conversions between privacy levels, ratios, and radii."""

from __future__ import annotations

import logging
import math

logger = logging.getLogger(__name__)


def epsilon_for_level(level: float, radius: float) -> float:
    """Return the epsilon giving indistinguishability ``level`` within ``radius``.

    ``level`` bounds the probability ratio of two locations at distance ``radius``: ln(2)/2 is level 2 within
    radius 2.
    """
    if level <= 1:
        raise ValueError(f"indistinguishability level must exceed 1, got {level}")
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")
    return math.log(level) / radius


def resolve_radius(radius: float | None, c: float | None, rho: float | None) -> float:
    """Return the spanner radius from either ``radius`` or the ratio ``c`` times the covering radius."""
    if (radius is None) == (c is None):
        raise ValueError("give exactly one of radius or c")
    if radius is not None:
        if radius <= 0:
            raise ValueError(f"radius must be positive, got {radius}")
        return radius
    assert c is not None
    if c <= 0:
        raise ValueError(f"c must be positive, got {c}")
    if rho is None or rho < 0:
        raise ValueError("resolving R from c needs the covering radius; supply rho explicitly")
    if rho == 0:
        # one location: nothing to connect
        return 0.0
    if c < 2:
        logger.warning("c = %s is below 2: the density hypothesis no longer guarantees a connected graph", c)
    return c * rho
