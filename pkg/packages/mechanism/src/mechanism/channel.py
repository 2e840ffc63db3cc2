"""The obfuscation channel: a row-stochastic matrix of reporting probabilities."""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np
from numpy.typing import ArrayLike

from geometry.locations import LocationSet

logger = logging.getLogger(__name__)

ROW_SUM_TOL = 1e-9
CLAMP_TOL = 1e-7
SOLUTION_ROW_SUM_TOL = 1e-6


class Mechanism:
    """Row ``x`` of ``matrix`` is the distribution of the reported location given true location ``ids[x]``.

    Parameters
    ----------
    matrix
        n x n probabilities, every row summing to one within 1e-9.
    epsilon
        Declared privacy level per unit distance.
    ids
        Location ids binding the matrix to a LocationSet, in canonical order.
    """

    def __init__(self, matrix: ArrayLike, epsilon: float, ids: Sequence[str]) -> None:
        values = np.array(matrix, dtype=np.float64)
        id_tuple = tuple(ids)
        n = len(id_tuple)
        if values.shape != (n, n):
            raise ValueError(f"mechanism matrix has shape {values.shape}, expected ({n}, {n}) for {n} ids")
        if n == 0:
            raise ValueError("a mechanism needs at least one location")
        if not epsilon > 0:
            raise ValueError(f"epsilon must be positive, got {epsilon}")
        if not np.all(np.isfinite(values)) or np.any(values < 0) or np.any(values > 1):
            raise ValueError("mechanism entries must lie in [0, 1]")
        sums = values.sum(axis=1)
        bad_rows = np.flatnonzero(np.abs(sums - 1.0) > ROW_SUM_TOL)
        if bad_rows.size:
            x = int(bad_rows[0])
            raise ValueError(f"mechanism row {id_tuple[x]} sums to {sums[x]:.15g}, not 1")
        values.setflags(write=False)
        self._matrix = values
        self._epsilon = float(epsilon)
        self._ids = id_tuple

    def __len__(self) -> int:
        return len(self._ids)

    def __repr__(self) -> str:
        return f"Mechanism(n={len(self)}, epsilon={self._epsilon:.6g})"

    @property
    def n(self) -> int:
        """Return the number of locations."""
        return len(self._ids)

    @property
    def matrix(self) -> np.ndarray:
        """Return the read-only probability matrix."""
        return self._matrix

    @property
    def epsilon(self) -> float:
        """Return the declared privacy level."""
        return self._epsilon

    @property
    def ids(self) -> tuple[str, ...]:
        """Return the location ids the matrix is bound to."""
        return self._ids

    def check_bound_to(self, locs: LocationSet) -> None:
        """Raise ValueError unless this mechanism was built for ``locs``."""
        if self._ids != locs.ids:
            raise ValueError(f"mechanism is bound to {self.n} other locations than the given set of {len(locs)}")

    @classmethod
    def from_solution(cls, solution: ArrayLike, locs: LocationSet, epsilon: float) -> Mechanism:
        """Build a mechanism from an LP solution vector in canonical x-major order.

        Entries within 1e-7 of [0, 1] are clamped and rows within 1e-6 of summing to one are renormalized;
        anything further off means the solution is not a channel.
        """
        n = len(locs)
        values = np.array(solution, dtype=np.float64).ravel()
        if values.shape != (n * n,):
            raise ValueError(f"solution has {values.size} entries, expected {n * n}")
        if not np.all(np.isfinite(values)):
            raise ValueError("solution not a channel: non-finite entries")
        worst = float(max(-values.min(), values.max() - 1.0, 0.0))
        if worst > CLAMP_TOL:
            raise ValueError(f"solution not a channel: entry outside [0, 1] by {worst:.3e}")
        if worst > 0:
            logger.debug("Clamping solution entries by up to %.3e", worst)
        matrix = np.clip(values, 0.0, 1.0).reshape(n, n)
        sums = matrix.sum(axis=1)
        off = np.flatnonzero(np.abs(sums - 1.0) > SOLUTION_ROW_SUM_TOL)
        if off.size:
            x = int(off[0])
            raise ValueError(f"solution not a channel: row {locs.ids[x]} sums to {sums[x]:.9g}")
        return cls(matrix / sums[:, np.newaxis], epsilon, locs.ids)


def uniform_mechanism(locs: LocationSet, epsilon: float) -> Mechanism:
    """Return the mechanism that reports every location with probability 1/n."""
    n = len(locs)
    return Mechanism(np.full((n, n), 1.0 / n), epsilon, locs.ids)


def identity_mechanism(locs: LocationSet, epsilon: float) -> Mechanism:
    """Return the mechanism that always reports the true location."""
    return Mechanism(np.eye(len(locs)), epsilon, locs.ids)
