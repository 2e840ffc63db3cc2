"""Domain exceptions that callers (mainly the CLI) need to tell apart."""

from __future__ import annotations


class DisconnectedGraphError(ValueError):
    """The constraint graph does not connect every pair of locations."""

    def __init__(self, source: str, target: str) -> None:
        super().__init__(f"constraint graph is disconnected: no path from {source} to {target}")
        self.source = source
        self.target = target


class SolverError(RuntimeError):
    """The linear program could not be solved to a certified optimum."""


class InfeasibleSolutionError(ValueError):
    """A candidate solution violates the rows of its linear program."""

    def __init__(self, message: str, max_violation: float) -> None:
        super().__init__(f"{message} (max violation {max_violation:.3e})")
        self.max_violation = max_violation
