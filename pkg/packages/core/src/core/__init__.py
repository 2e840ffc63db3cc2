"""Core shared settings, schemas, and errors."""

from core.config import Settings
from core.enums import ConstraintKind, PivotRule, SolverKind, SolveStatus, SweepStatus
from core.errors import DisconnectedGraphError, InfeasibleSolutionError, SolverError
from core.schemas import (
    DilationSummary,
    MechanismDocument,
    PrivacyReport,
    RunConfig,
    SolveReport,
    SolverOptions,
    SolveRunReport,
    SweepRow,
)

__all__ = [
    "ConstraintKind",
    "DilationSummary",
    "DisconnectedGraphError",
    "InfeasibleSolutionError",
    "MechanismDocument",
    "PivotRule",
    "PrivacyReport",
    "RunConfig",
    "Settings",
    "SolveReport",
    "SolveRunReport",
    "SolveStatus",
    "SolverError",
    "SolverKind",
    "SolverOptions",
    "SweepRow",
    "SweepStatus",
]
