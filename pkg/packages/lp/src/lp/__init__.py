"""Mechanism linear program: assembly, builtin solver, and exchange with external solvers."""

from lp.lpfile import ParsedLP, ParsedRow, export_lp, import_solution, read_lp, write_solution
from lp.program import LinearProgram, assemble, check_feasibility, residuals
from lp.simplex import DualRevisedSimplex, SimplexResult
from lp.solve import solve_builtin

__all__ = [
    "DualRevisedSimplex",
    "LinearProgram",
    "ParsedLP",
    "ParsedRow",
    "SimplexResult",
    "assemble",
    "check_feasibility",
    "export_lp",
    "import_solution",
    "read_lp",
    "residuals",
    "solve_builtin",
    "write_solution",
]
