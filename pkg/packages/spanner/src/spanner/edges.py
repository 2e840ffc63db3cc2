"""Constraint graph edges within a fixed radius."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from geometry.locations import LocationSet, covering_radius

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EdgeSet:
    """Directed edges ``(sources[k], targets[k])`` of length at most ``radius``, sorted by (source, target).

    Every edge appears in both directions.
    """

    sources: np.ndarray
    targets: np.ndarray
    lengths: np.ndarray
    radius: float
    n: int
    rho: float | None = None

    def __post_init__(self) -> None:
        if not len(self.sources) == len(self.targets) == len(self.lengths):
            raise ValueError("edge arrays must have equal length")
        if np.any(self.sources == self.targets):
            raise ValueError("edges may not be self-loops")
        for arr in (self.sources, self.targets, self.lengths):
            arr.setflags(write=False)

    def __len__(self) -> int:
        return len(self.sources)

    @property
    def below_density_threshold(self) -> bool:
        """Return True when the covering radius is known and R < 2 rho."""
        return self.rho is not None and self.radius < 2 * self.rho

    def pairs(self) -> list[tuple[int, int]]:
        """Return the edges as (source, target) tuples."""
        return list(zip(self.sources.tolist(), self.targets.tolist()))


def build_edges(locs: LocationSet, radius: float, rho: float | None = None) -> EdgeSet:
    """Return every ordered pair of distinct locations at distance at most ``radius``.

    ``rho`` defaults to the grid covering radius when the set is grid-generated; a radius below ``2 rho`` is
    logged as a warning and flagged on the result, connectivity itself is checked by the dilation.
    """
    if not (radius > 0 or (radius == 0 and len(locs) == 1)):
        raise ValueError(f"spanner radius must be positive, got {radius}")
    if rho is None and locs.spacing is not None:
        rho = covering_radius(locs)

    dist = locs.distance_matrix()
    mask = dist <= radius
    np.fill_diagonal(mask, False)
    sources, targets = np.nonzero(mask)
    edges = EdgeSet(
        sources=sources.astype(np.int64),
        targets=targets.astype(np.int64),
        lengths=dist[sources, targets].astype(np.float64),
        radius=float(radius),
        n=len(locs),
        rho=rho,
    )
    if edges.below_density_threshold:
        logger.warning("R = %.6g is below 2 rho = %.6g; the graph may not connect every pair of locations", radius, 2 * (rho or 0.0))
    logger.debug("Built %d directed edges within R = %.6g over %d locations", len(edges), radius, len(locs))
    return edges


def all_pairs_edges(locs: LocationSet) -> EdgeSet:
    """Return the complete directed edge set."""
    dist = locs.distance_matrix()
    return build_edges(locs, float(dist.max()) if len(locs) > 1 else 1.0)
