"""Exhaustive check of the geo-indistinguishability inequality over all ordered triples."""

from __future__ import annotations

import logging

import numpy as np

from core.schemas import PrivacyReport
from geometry.locations import LocationSet
from mechanism.channel import Mechanism

logger = logging.getLogger(__name__)


def verify_privacy(mech: Mechanism, locs: LocationSet, epsilon: float, tol: float = 1e-7) -> PrivacyReport:
    """Check ``ln p(y|a) - ln p(y|b) <= epsilon * d(a, b)`` for every a != b and every y.

    A zero ``p(y|a)`` never violates; a positive ``p(y|a)`` against a zero ``p(y|b)`` is an infinite
    violation. The worst triple is the one with the largest excess, the lowest (a, b, y) on ties.
    """
    if tol < 0:
        raise ValueError(f"tolerance must be nonnegative, got {tol}")
    if epsilon < 0:
        raise ValueError(f"epsilon must be nonnegative, got {epsilon}")
    mech.check_bound_to(locs)

    n = mech.n
    matrix = mech.matrix
    positive = matrix > 0
    with np.errstate(divide="ignore"):
        log_matrix = np.log(matrix)
    dist = locs.distance_matrix()

    best = -np.inf
    worst: tuple[int, int, int] | None = None
    infinite = 0
    for a in range(n):
        with np.errstate(invalid="ignore"):
            excess = log_matrix[a][np.newaxis, :] - log_matrix - epsilon * dist[a][:, np.newaxis]
        excess = np.where(positive[a][np.newaxis, :], np.where(positive, excess, np.inf), -np.inf)
        excess[a, :] = -np.inf
        infinite += int(np.count_nonzero(np.isposinf(excess)))
        flat = int(np.argmax(excess))
        if excess.flat[flat] > best:
            best = float(excess.flat[flat])
            b, y = divmod(flat, n)
            worst = (a, b, y)

    max_violation = max(0.0, best)
    satisfied = max_violation <= tol
    worst_ids = None if worst is None else (locs.ids[worst[0]], locs.ids[worst[1]], locs.ids[worst[2]])
    if not satisfied:
        logger.warning("Privacy violated: max log excess %.6g at %s (%d infinite)", max_violation, worst_ids, infinite)
    return PrivacyReport(
        satisfied=satisfied,
        max_log_violation=max_violation,
        worst_triple=worst_ids,
        triples_checked=n * n * (n - 1),
        infinite_violations=infinite,
        epsilon=epsilon,
        tol=tol,
    )
