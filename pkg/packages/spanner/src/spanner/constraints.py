"""Exact and reduced geo-indistinguishability constraint sets."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pandas as pd

from core.enums import ConstraintKind
from geometry.locations import LocationSet
from spanner.edges import EdgeSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConstraintSet:
    """Rows ``p(y | a) <= mult * p(y | b)`` sorted by (a, b, y)."""

    a: np.ndarray
    b: np.ndarray
    y: np.ndarray
    mult: np.ndarray
    n: int
    epsilon: float
    kind: ConstraintKind
    delta: float = 1.0

    def __post_init__(self) -> None:
        if not len(self.a) == len(self.b) == len(self.y) == len(self.mult):
            raise ValueError("constraint arrays must have equal length")
        if np.any(self.a == self.b):
            raise ValueError("a constraint may not relate a location to itself")
        if np.any(self.mult < 1.0):
            raise ValueError("constraint multipliers must be at least 1")
        for arr in (self.a, self.b, self.y, self.mult):
            arr.setflags(write=False)

    def __len__(self) -> int:
        return len(self.a)

    def rows(self) -> list[tuple[int, int, int, float]]:
        """Return the rows as ``(a, b, y, mult)`` tuples."""
        return list(zip(self.a.tolist(), self.b.tolist(), self.y.tolist(), self.mult.tolist()))


def _expand_over_reports(sources: np.ndarray, targets: np.ndarray, exponents: np.ndarray, n: int) -> tuple[np.ndarray, ...]:
    """Repeat each (a, b) pair once per reported location y."""
    a = np.repeat(sources.astype(np.int32), n)
    b = np.repeat(targets.astype(np.int32), n)
    y = np.tile(np.arange(n, dtype=np.int32), len(sources))
    mult = np.repeat(np.exp(exponents), n)
    return a, b, y, mult


def exact_constraints(locs: LocationSet, epsilon: float) -> ConstraintSet:
    """Return ``p(y|a) <= exp(eps * d(a, b)) * p(y|b)`` for every ordered pair a != b and every y."""
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    n = len(locs)
    dist = locs.distance_matrix()
    mask = ~np.eye(n, dtype=bool)
    sources, targets = np.nonzero(mask)
    a, b, y, mult = _expand_over_reports(sources, targets, epsilon * dist[sources, targets], n)
    logger.debug("Generated %d exact constraints over %d locations", len(a), n)
    return ConstraintSet(a=a, b=b, y=y, mult=mult, n=n, epsilon=epsilon, kind=ConstraintKind.EXACT, delta=1.0)


def reduced_constraints(locs: LocationSet, edges: EdgeSet, delta: float, epsilon: float) -> ConstraintSet:
    """Return ``p(y|a) <= exp(eps * d(a, b) / delta) * p(y|b)`` for every edge (a, b) and every y."""
    if not delta >= 1:
        raise ValueError(f"delta must be at least 1, got {delta}")
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    n = len(locs)
    if edges.n != n:
        raise ValueError(f"edge set covers {edges.n} locations, location set has {n}")
    a, b, y, mult = _expand_over_reports(edges.sources, edges.targets, epsilon * edges.lengths / delta, n)
    logger.debug("Generated %d reduced constraints from %d edges (delta %.6f)", len(a), len(edges), delta)
    return ConstraintSet(a=a, b=b, y=y, mult=mult, n=n, epsilon=epsilon, kind=ConstraintKind.REDUCED, delta=delta)


def exact_row_count(n: int) -> int:
    """Return the number of exact constraints over ``n`` locations, n^2 (n - 1)."""
    if n < 1:
        raise ValueError(f"need at least one location, got {n}")
    return n * n * (n - 1)


def reduced_row_count(edges: EdgeSet) -> int:
    """Return the number of reduced constraints, one per edge and reported location."""
    return len(edges) * edges.n


def dump_constraints(cs: ConstraintSet, locs: LocationSet, path: Path) -> None:
    """Write ``a,b,y,mult`` rows with location ids in (a, b, y) order."""
    if cs.n != len(locs):
        raise ValueError(f"constraint set covers {cs.n} locations, location set has {len(locs)}")
    ids = np.array(locs.ids, dtype=object)
    frame = pd.DataFrame({"a": ids[cs.a], "b": ids[cs.b], "y": ids[cs.y], "mult": cs.mult})
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format="%.17g", lineterminator="\n")
