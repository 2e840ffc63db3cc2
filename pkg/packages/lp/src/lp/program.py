"""Assembly of the utility-loss linear program over a mechanism's n^2 probabilities."""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix

from geometry.locations import LocationSet
from geometry.prior import Prior
from spanner.constraints import ConstraintSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearProgram:
    """Minimize ``objective @ p`` subject to ``eq_matrix @ p = 1``, ``ineq_matrix @ p <= 0`` and ``p >= 0``.

    Variable ``x * n + y`` is p(y | x); equality row ``x`` is the normalization of row x of the mechanism and
    inequality row ``k`` is the k-th privacy row of ``constraints``.
    """

    n: int
    ids: tuple[str, ...]
    objective: np.ndarray
    eq_matrix: csr_matrix
    ineq_matrix: csr_matrix
    constraints: ConstraintSet

    @property
    def num_variables(self) -> int:
        """Return n^2."""
        return self.n * self.n

    @property
    def num_eq_rows(self) -> int:
        """Return the number of normalization rows."""
        return self.eq_matrix.shape[0]

    @property
    def num_ineq_rows(self) -> int:
        """Return the number of privacy rows."""
        return self.ineq_matrix.shape[0]

    @property
    def num_rows(self) -> int:
        """Return the total row count n + |constraints|."""
        return self.num_eq_rows + self.num_ineq_rows

    def variable_index(self, x: int, y: int) -> int:
        """Return the position of p(y | x) in the canonical x-major order."""
        return x * self.n + y

    def variable_names(self) -> list[str]:
        """Return ``p_{xid}_{yid}`` for every variable in canonical order."""
        return [f"p_{x}_{y}" for x in self.ids for y in self.ids]

    def eq_row_names(self) -> list[str]:
        """Return ``norm_{xid}`` for every equality row."""
        return [f"norm_{x}" for x in self.ids]

    def ineq_row_names(self) -> list[str]:
        """Return ``priv_{aid}_{bid}_{yid}`` for every privacy row."""
        ids = self.ids
        cs = self.constraints
        return [f"priv_{ids[a]}_{ids[b]}_{ids[y]}" for a, b, y in zip(cs.a.tolist(), cs.b.tolist(), cs.y.tolist())]

    @property
    def row_scale(self) -> np.ndarray:
        """Return the largest coefficient of every privacy row, which is its multiplier."""
        return self.constraints.mult

    def check_names(self) -> None:
        """Raise ValueError if two variables or two rows share a name.

        Ids may contain ``_``, the separator of the generated names, so distinct ids such as ``1`` with ``2_3``
        and ``1_2`` with ``3`` both produce ``p_1_2_3``.
        """
        for kind, names in (("variable", self.variable_names()), ("row", self.eq_row_names() + self.ineq_row_names())):
            clashes = sorted(name for name, count in Counter(names).items() if count > 1)
            if clashes:
                shown = ", ".join(clashes[:5])
                raise ValueError(f"location ids give {len(clashes)} ambiguous {kind} names ({shown}); rename ids containing '_'")


def assemble(locs: LocationSet, prior: Prior, cs: ConstraintSet) -> LinearProgram:
    """Build the linear program whose optimum is the utility-optimal mechanism under ``cs``.

    The objective coefficient of p(y | x) is pi(x) * d(x, y), so the objective is the expected distance between
    true and reported location.
    """
    n = len(locs)
    if len(prior) != n:
        raise ValueError(f"prior has {len(prior)} entries but the location set has {n}")
    if cs.n != n:
        raise ValueError(f"constraint set covers {cs.n} locations but the location set has {n}")
    if not cs.epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {cs.epsilon}")

    objective = (prior.probs[:, np.newaxis] * locs.distance_matrix()).ravel().copy()
    objective.setflags(write=False)

    eq_rows = np.repeat(np.arange(n), n)
    eq_matrix = csr_matrix((np.ones(n * n), (eq_rows, np.arange(n * n))), shape=(n, n * n))

    m = len(cs)
    rows = np.repeat(np.arange(m), 2)
    cols = np.empty(2 * m, dtype=np.int64)
    cols[0::2] = cs.a.astype(np.int64) * n + cs.y
    cols[1::2] = cs.b.astype(np.int64) * n + cs.y
    data = np.empty(2 * m)
    data[0::2] = 1.0
    data[1::2] = -cs.mult
    ineq_matrix = csr_matrix((data, (rows, cols)), shape=(m, n * n))

    logger.debug("Assembled LP with %d variables, %d equality and %d privacy rows", n * n, n, m)
    return LinearProgram(n=n, ids=locs.ids, objective=objective, eq_matrix=eq_matrix, ineq_matrix=ineq_matrix, constraints=cs)


def residuals(lp: LinearProgram, solution: np.ndarray) -> tuple[float, float, float]:
    """Return the largest violation of the normalization, privacy and nonnegativity rows.

    A privacy row is measured after dividing it by its multiplier, i.e. as ``p(y|a) / mult - p(y|b)``, so
    the tolerance applies to the smaller side of the ratio whatever the privacy level. Any non-finite entry
    makes every residual infinite.
    """
    p = np.asarray(solution, dtype=np.float64)
    if p.shape != (lp.num_variables,):
        raise ValueError(f"solution has shape {p.shape}, expected ({lp.num_variables},)")
    if not np.all(np.isfinite(p)):
        return math.inf, math.inf, math.inf
    norm = float(np.abs(lp.eq_matrix @ p - 1.0).max()) if lp.num_eq_rows else 0.0
    priv = max(0.0, float(((lp.ineq_matrix @ p) / lp.row_scale).max())) if lp.num_ineq_rows else 0.0
    bound = max(0.0, float(-p.min()))
    return norm, priv, bound


def check_feasibility(lp: LinearProgram, solution: np.ndarray) -> float:
    """Return the maximum violation of any row or bound of ``lp`` at ``solution``."""
    return max(residuals(lp, solution))
