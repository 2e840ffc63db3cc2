"""Enumerations shared across the mechanism construction pipeline."""

from enum import Enum


class ConstraintKind(str, Enum):
    """Which privacy constraint family a ConstraintSet holds."""

    EXACT = "exact"
    REDUCED = "reduced"


class SolveStatus(str, Enum):
    """Outcome of a linear program solve."""

    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    ITERATION_LIMIT = "iteration-limit"


class SolverKind(str, Enum):
    """Where a solution came from (or where the LP goes)."""

    BUILTIN = "builtin"
    EXTERNAL = "external"
    EXPORT = "export"


class PivotRule(str, Enum):
    """Entering-variable rule of the builtin simplex."""

    BLAND = "bland"
    DANTZIG = "dantzig"
    DEVEX = "devex"


class SweepStatus(str, Enum):
    """Per-row outcome of a benchmark sweep."""

    OK = "ok"
    EXPORTED = "exported"
    DISCONNECTED = "disconnected"
    SOLVER_FAILURE = "solver-failure"
