"""Revised simplex on the dual of the mechanism linear program.

The primal ``min c.p  s.t.  E p = 1, G p <= 0, p >= 0`` has n^2 variables but up to n^2 (n - 1) rows, so the
solver works on its dual in standard form::

    min  -1.u+ + 1.u-   s.t.  [E^T  -E^T  -G^T  I] z = c,  z = (u+, u-, v, s) >= 0

whose basis has only n^2 rows. The all-slack basis is feasible because every ``c`` entry is nonnegative, and
the simplex multipliers of the final basis are ``-p``. Each privacy row of ``G`` is divided by its largest
coefficient first; that rescales ``v`` only and leaves the multipliers unchanged.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.linalg import lu_factor, lu_solve
from scipy.sparse import csc_matrix, csr_matrix, diags, hstack, identity

from core.enums import PivotRule, SolveStatus
from core.schemas import SolverOptions

logger = logging.getLogger(__name__)

PIVOT_TOL = 1e-9
RATIO_TIE_TOL = 1e-12
DEGENERATE_STEP_TOL = 1e-12
DEVEX_RESET = 1e8


@dataclass(frozen=True)
class SimplexResult:
    """Final state of a dual simplex run."""

    status: SolveStatus
    multipliers: np.ndarray
    dual_objective: float
    iterations: int
    basis: np.ndarray
    slack_offset: int


@dataclass(frozen=True)
class _Eta:
    row: int
    column: np.ndarray


def _equilibrate_rows(matrix: csr_matrix) -> csr_matrix:
    """Divide every row by its largest absolute coefficient."""
    if matrix.shape[0] == 0:
        return matrix
    row_max = np.asarray(abs(matrix).max(axis=1).todense()).ravel()
    row_max[row_max == 0] = 1.0
    return csr_matrix(diags(1.0 / row_max) @ matrix)


class DualRevisedSimplex:
    """Bounded-workspace revised simplex with LU refactorization and product-form updates in between.

    Columns are ordered ``u+`` (n), ``u-`` (n), ``v`` (one per privacy row), ``s`` (n^2). Pricing follows
    ``options.pivot_rule``:

    - ``devex``: largest ``d_j^2 / w_j`` over reference weights ``w``, updated from the pivot row
    - ``dantzig``: most negative reduced cost
    - ``bland``: lowest-index improving column

    Devex and Dantzig hand over to Bland's rule after ``degenerate_pivot_limit`` consecutive degenerate
    pivots and take over again after the first pivot that moves. Ratio ties go to the lowest basic column
    index. Prices are updated from the pivot row and recomputed at every refactorization.
    """

    def __init__(self, objective: np.ndarray, eq_matrix: csr_matrix, ineq_matrix: csr_matrix, options: SolverOptions | None = None) -> None:
        self.options = options or SolverOptions()
        rhs = np.asarray(objective, dtype=np.float64)
        if np.any(rhs < 0) or not np.all(np.isfinite(rhs)):
            raise ValueError("objective coefficients must be finite and nonnegative")
        self.size = rhs.shape[0]
        self.scale = float(rhs.max()) if rhs.size and rhs.max() > 0 else 1.0
        self.rhs = rhs / self.scale

        eq_t = csc_matrix(eq_matrix.T)
        ineq_t = csc_matrix(_equilibrate_rows(csr_matrix(ineq_matrix, dtype=np.float64)).T)
        n_eq = eq_t.shape[1]
        self.matrix = csc_matrix(hstack([eq_t, -eq_t, -ineq_t, identity(self.size, format="csc")], format="csc"))
        self.matrix_t = csr_matrix(self.matrix.T)
        self.slack_offset = 2 * n_eq + ineq_t.shape[1]
        self.num_columns = self.matrix.shape[1]

        self.cost = np.zeros(self.num_columns)
        self.cost[:n_eq] = -1.0
        self.cost[n_eq : 2 * n_eq] = 1.0

        self.basis = np.arange(self.slack_offset, self.num_columns)
        self.in_basis = np.zeros(self.num_columns, dtype=bool)
        self.in_basis[self.basis] = True
        self.iterations = 0
        self.degenerate_run = 0
        self._lu: tuple[np.ndarray, np.ndarray] | None = None
        self._etas: list[_Eta] = []
        self.x_basic = self.rhs.copy()
        # all-slack basis: zero cost on the basis, so y = 0 and d = cost
        self.y = np.zeros(self.size)
        self.reduced = self.cost.copy()
        self.weights = np.ones(self.num_columns)

    def _column(self, j: int) -> np.ndarray:
        start, stop = self.matrix.indptr[j], self.matrix.indptr[j + 1]
        col = np.zeros(self.size)
        col[self.matrix.indices[start:stop]] = self.matrix.data[start:stop]
        return col

    def _refactor(self) -> None:
        basis_matrix = self.matrix[:, self.basis].toarray()
        self._lu = lu_factor(basis_matrix, check_finite=False)
        self._etas = []
        self.x_basic = lu_solve(self._lu, self.rhs, check_finite=False)
        np.maximum(self.x_basic, 0.0, out=self.x_basic)
        self._price()

    def _price(self) -> None:
        self.y = self._btran(self.cost[self.basis])
        self.reduced = self.cost - self.matrix_t @ self.y

    def _ftran(self, vec: np.ndarray) -> np.ndarray:
        out = lu_solve(self._lu, vec, check_finite=False) if self._lu is not None else vec.copy()
        for eta in self._etas:
            pivot = out[eta.row] / eta.column[eta.row]
            out -= pivot * eta.column
            out[eta.row] = pivot
        return out

    def _btran(self, vec: np.ndarray) -> np.ndarray:
        out = vec.copy()
        for eta in reversed(self._etas):
            r = eta.row
            out[r] = (out[r] - (eta.column @ out - eta.column[r] * out[r])) / eta.column[r]
        if self._lu is not None:
            out = lu_solve(self._lu, out, trans=1, check_finite=False)
        return out

    def _multipliers(self) -> np.ndarray:
        return self._btran(self.cost[self.basis])

    @property
    def _bland_active(self) -> bool:
        return self.options.pivot_rule == PivotRule.BLAND or self.degenerate_run >= self.options.degenerate_pivot_limit

    def _entering(self) -> int | None:
        candidates = np.flatnonzero((self.reduced < -self.options.reduced_cost_tol) & ~self.in_basis)
        if candidates.size == 0:
            return None
        if self._bland_active:
            return int(candidates[0])
        if self.options.pivot_rule == PivotRule.DANTZIG:
            return int(candidates[np.argmin(self.reduced[candidates])])
        scores = self.reduced[candidates] ** 2 / self.weights[candidates]
        return int(candidates[np.argmax(scores)])

    def _leaving(self, direction: np.ndarray) -> int | None:
        positive = np.flatnonzero(direction > PIVOT_TOL)
        if positive.size == 0:
            return None
        ratios = self.x_basic[positive] / direction[positive]
        best = ratios.min()
        tied = positive[ratios <= best + RATIO_TIE_TOL * (1.0 + best)]
        return int(tied[np.argmin(self.basis[tied])])

    def _update_prices(self, entering: int, row: int, pivot: float) -> None:
        """Update multipliers, reduced costs and devex weights from pivot row ``row`` of ``B^-1 A``."""
        unit = np.zeros(self.size)
        unit[row] = 1.0
        rho = self._btran(unit)
        alpha = self.matrix_t @ rho
        step = self.reduced[entering] / pivot
        self.y += step * rho
        self.reduced -= step * alpha

        if self.options.pivot_rule == PivotRule.DEVEX:
            w_entering = self.weights[entering]
            np.maximum(self.weights, (alpha / pivot) ** 2 * w_entering, out=self.weights)
            self.weights[self.basis[row]] = max(w_entering / pivot**2, 1.0)
            if self.weights.max() > DEVEX_RESET:
                self.weights.fill(1.0)

    def _pivot(self, entering: int, row: int, direction: np.ndarray) -> None:
        step = self.x_basic[row] / direction[row]
        self.degenerate_run = self.degenerate_run + 1 if step <= DEGENERATE_STEP_TOL else 0
        if self.degenerate_run == self.options.degenerate_pivot_limit and self.options.pivot_rule != PivotRule.BLAND:
            logger.debug("Switching to Bland's rule after %d degenerate pivots", self.degenerate_run)
        self.x_basic -= step * direction
        self.x_basic[row] = step
        np.maximum(self.x_basic, 0.0, out=self.x_basic)
        self.in_basis[self.basis[row]] = False
        self.in_basis[entering] = True
        self.basis[row] = entering
        self._etas.append(_Eta(row=row, column=direction))
        if len(self._etas) >= self.options.refactor_interval:
            self._refactor()

    def solve(self) -> SimplexResult:
        """Pivot until no column prices out, the dual is unbounded, or ``max_iters`` is reached."""
        status = SolveStatus.ITERATION_LIMIT
        while self.iterations < self.options.max_iters:
            entering = self._entering()
            if entering is None:
                if self._etas or self._lu is None:
                    # confirm optimality on fresh prices before stopping
                    self._refactor()
                    if self._entering() is not None:
                        continue
                status = SolveStatus.OPTIMAL
                break
            direction = self._ftran(self._column(entering))
            row = self._leaving(direction)
            if row is None:
                status = SolveStatus.INFEASIBLE
                break
            self._update_prices(entering, row, float(direction[row]))
            self._pivot(entering, row, direction)
            self.iterations += 1
            if self.iterations % 1000 == 0:
                logger.debug("Simplex iteration %d, dual objective %.12g", self.iterations, self._dual_objective())

        if status == SolveStatus.ITERATION_LIMIT:
            logger.warning("Simplex stopped at the iteration limit (%d)", self.options.max_iters)
        return SimplexResult(
            status=status,
            multipliers=self._multipliers(),
            dual_objective=self._dual_objective(),
            iterations=self.iterations,
            basis=self.basis.copy(),
            slack_offset=self.slack_offset,
        )

    def _dual_objective(self) -> float:
        return -float(self.cost[self.basis] @ self.x_basic) * self.scale
