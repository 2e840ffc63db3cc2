"""Tests for the dual revised simplex internals."""

import numpy as np
import pytest

from core.enums import PivotRule, SolveStatus
from core.schemas import SolverOptions
from lp.program import LinearProgram
from lp.simplex import DualRevisedSimplex


def fresh_prices(simplex: DualRevisedSimplex) -> tuple[np.ndarray, np.ndarray]:
    """Return multipliers and reduced costs computed directly from the current basis."""
    basis_matrix = simplex.matrix[:, simplex.basis].toarray()
    y = np.linalg.solve(basis_matrix.T, simplex.cost[simplex.basis])
    return y, simplex.cost - simplex.matrix_t @ y


class TestDualRevisedSimplex:
    """Tests for DualRevisedSimplex."""

    @pytest.mark.parametrize("rule", list(PivotRule))
    def test_updated_prices_match_fresh(self, grid3_exact_lp: LinearProgram, rule: PivotRule) -> None:
        """Verify prices carried through 20 pivots without refactoring equal prices solved from scratch."""
        lp = grid3_exact_lp
        options = SolverOptions(max_iters=20, refactor_interval=1_000, pivot_rule=rule)
        simplex = DualRevisedSimplex(lp.objective, lp.eq_matrix, lp.ineq_matrix, options)
        result = simplex.solve()
        assert result.status == SolveStatus.ITERATION_LIMIT
        y, reduced = fresh_prices(simplex)
        np.testing.assert_allclose(simplex.y, y, atol=1e-9)
        np.testing.assert_allclose(simplex.reduced, reduced, atol=1e-9)

    def test_row_scaling_invariant(self, grid3_reduced_lp: LinearProgram) -> None:
        """Verify multiplying privacy rows by positive factors leaves the optimum unchanged."""
        lp = grid3_reduced_lp
        factors = np.linspace(0.5, 40.0, lp.num_ineq_rows)
        scaled = lp.ineq_matrix.multiply(factors[:, np.newaxis]).tocsr()
        base = DualRevisedSimplex(lp.objective, lp.eq_matrix, lp.ineq_matrix).solve()
        other = DualRevisedSimplex(lp.objective, lp.eq_matrix, scaled).solve()
        assert other.status == base.status == SolveStatus.OPTIMAL
        assert other.dual_objective == pytest.approx(base.dual_objective, abs=1e-9)
        assert float(lp.objective @ -other.multipliers) == pytest.approx(base.dual_objective, abs=1e-9)

    def test_all_slack_start(self, pair_lp: LinearProgram) -> None:
        """Verify the starting basis is the slack block with zero multipliers."""
        simplex = DualRevisedSimplex(pair_lp.objective, pair_lp.eq_matrix, pair_lp.ineq_matrix)
        assert simplex.basis.tolist() == list(range(simplex.slack_offset, simplex.slack_offset + 4))
        np.testing.assert_array_equal(simplex.y, 0.0)
        np.testing.assert_array_equal(simplex.reduced, simplex.cost)

    def test_rejects_negative_objective(self, pair_lp: LinearProgram) -> None:
        """Verify a negative distance coefficient is refused."""
        with pytest.raises(ValueError, match="nonnegative"):
            DualRevisedSimplex(-np.ones(4), pair_lp.eq_matrix, pair_lp.ineq_matrix)
