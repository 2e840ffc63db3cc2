"""Exact dilation (stretch factor) of a constraint graph and the implication certificate."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from core.errors import DisconnectedGraphError
from core.schemas import DilationSummary
from geometry.locations import LocationSet
from spanner.edges import EdgeSet

logger = logging.getLogger(__name__)

WITNESS_TOL = 1e-12
CERTIFICATE_TOL = 1e-9
FLOYD_WARSHALL_MAX_N = 400


@dataclass(frozen=True)
class DilationResult:
    """Exact dilation of an edge set with the all-pairs shortest-path table it was read from."""

    delta: float
    witness: tuple[int, int] | None
    sp_table: np.ndarray
    predecessors: np.ndarray

    def path(self, source: int, target: int) -> list[int]:
        """Return the shortest path from ``source`` to ``target`` as location indices."""
        route = [target]
        while route[-1] != source:
            previous = int(self.predecessors[source, route[-1]])
            if previous < 0:
                raise ValueError(f"no path from {source} to {target}")
            route.append(previous)
        return route[::-1]

    def summary(self, locs: LocationSet, edges: EdgeSet) -> DilationSummary:
        """Return the serializable view of this result."""
        witness_ids = None
        witness_path: list[str] = []
        if self.witness is not None:
            a, b = self.witness
            witness_ids = (locs.ids[a], locs.ids[b])
            witness_path = [locs.ids[k] for k in self.path(a, b)]
        return DilationSummary(delta=self.delta, witness=witness_ids, witness_path=witness_path, edges=len(edges), radius=edges.radius)


def dilation(locs: LocationSet, edges: EdgeSet) -> DilationResult:
    """Return the largest ratio of shortest-path length to Euclidean distance over all pairs.

    Edge weights are Euclidean lengths, so the result is the smallest delta for which chaining the shrunk
    constraints along shortest paths implies every direct constraint.
    """
    n = len(locs)
    if edges.n != n:
        raise ValueError(f"edge set covers {edges.n} locations, location set has {n}")
    if n == 1:
        return DilationResult(delta=1.0, witness=None, sp_table=np.zeros((1, 1)), predecessors=np.full((1, 1), -9999))

    graph = csr_matrix((edges.lengths, (edges.sources, edges.targets)), shape=(n, n))
    method = "FW" if n <= FLOYD_WARSHALL_MAX_N else "D"
    sp_table, predecessors = shortest_path(graph, method=method, directed=True, return_predecessors=True)

    unreachable = np.argwhere(np.isinf(sp_table))
    if len(unreachable):
        a, b = (int(v) for v in unreachable[0])
        raise DisconnectedGraphError(locs.ids[a], locs.ids[b])

    dist = locs.distance_matrix()
    off_diagonal = ~np.eye(n, dtype=bool)
    ratios = np.zeros((n, n))
    ratios[off_diagonal] = sp_table[off_diagonal] / dist[off_diagonal]
    delta = max(1.0, float(ratios.max()))
    if delta - 1.0 <= WITNESS_TOL:
        delta = 1.0
    witness_flat = int(np.flatnonzero(ratios.ravel() >= delta * (1 - WITNESS_TOL))[0])
    witness = divmod(witness_flat, n)

    sp_table.setflags(write=False)
    predecessors.setflags(write=False)
    logger.info("Dilation %.9f over %d edges (witness %s -> %s)", delta, len(edges), locs.ids[witness[0]], locs.ids[witness[1]])
    return DilationResult(delta=delta, witness=(int(witness[0]), int(witness[1])), sp_table=sp_table, predecessors=predecessors)


@dataclass(frozen=True)
class ImplicationReport:
    """Check that chained shrunk constraints imply every direct privacy constraint."""

    delta: float
    epsilon: float
    max_violation: float
    pairs_checked: int
    tight_pairs: int
    violations: list[tuple[str, str, float, float]] = field(default_factory=list)

    @property
    def sound(self) -> bool:
        """Return True when no pair's chained exponent exceeds its direct exponent."""
        return not self.violations


def implication_certificate(
    locs: LocationSet,
    edges: EdgeSet,
    dil: DilationResult,
    epsilon: float,
    delta: float | None = None,
) -> ImplicationReport:
    """Compare, for every ordered pair, the chained exponent ``(eps / delta) * sp(a, b)`` to ``eps * d(a, b)``.

    ``delta`` defaults to the computed dilation; passing another value checks a supplied dilation instead.
    Violations are listed as ``(a_id, b_id, chained, direct)`` in row-major pair order.
    """
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    used_delta = dil.delta if delta is None else delta
    if used_delta <= 0:
        raise ValueError(f"delta must be positive, got {used_delta}")
    n = len(locs)
    if dil.sp_table.shape != (n, n) or edges.n != n:
        raise ValueError("dilation result does not match the location set")

    off_diagonal = ~np.eye(n, dtype=bool)
    chained = (epsilon / used_delta) * dil.sp_table
    direct = epsilon * locs.distance_matrix()
    slack = np.where(off_diagonal, chained - direct, -np.inf)

    violations = [(locs.ids[a], locs.ids[b], float(chained[a, b]), float(direct[a, b])) for a, b in np.argwhere(slack > CERTIFICATE_TOL)]
    tight = int(np.count_nonzero(np.abs(np.where(off_diagonal, chained - direct, np.inf)) <= CERTIFICATE_TOL))
    max_violation = max(0.0, float(slack.max())) if n > 1 else 0.0
    if violations:
        logger.warning("Implication certificate failed on %d pairs (max violation %.3e)", len(violations), max_violation)
    return ImplicationReport(
        delta=used_delta,
        epsilon=epsilon,
        max_violation=max_violation,
        pairs_checked=n * (n - 1),
        tight_pairs=tight,
        violations=violations,
    )
