"""Pydantic models for every record the pipeline serializes."""

from __future__ import annotations

from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.config import Settings
from core.enums import PivotRule, SolverKind, SolveStatus


class SolverOptions(BaseModel):
    """Tolerances and limits of the builtin simplex."""

    max_iters: int = Field(default=200_000, ge=1)
    feas_tol: float = Field(default=1e-9, gt=0)
    duality_tol: float = Field(default=1e-7, gt=0)
    reduced_cost_tol: float = Field(default=1e-11, gt=0)
    refactor_interval: int = Field(default=50, ge=1)
    pivot_rule: PivotRule = PivotRule.DEVEX
    degenerate_pivot_limit: int = Field(default=50, ge=1)

    @classmethod
    def from_settings(cls, settings: Settings) -> SolverOptions:
        """Build solver options from application settings."""
        return cls(
            max_iters=settings.max_iters,
            feas_tol=settings.feas_tol,
            duality_tol=settings.duality_tol,
            reduced_cost_tol=settings.reduced_cost_tol,
            refactor_interval=settings.refactor_interval,
            pivot_rule=settings.pivot_rule,
            degenerate_pivot_limit=settings.degenerate_pivot_limit,
        )


class SolveReport(BaseModel):
    """Outcome and cost of one solve."""

    status: SolveStatus
    objective_value: float | None = None
    iterations: int = Field(default=0, ge=0)
    wall_time: float = Field(default=0.0, ge=0.0, description="Seconds")
    solver: SolverKind = SolverKind.BUILTIN
    duality_gap: float | None = None
    max_violation: float | None = None

    @model_validator(mode="after")
    def _optimal_has_objective(self) -> Self:
        if self.status == SolveStatus.OPTIMAL and (self.objective_value is None or self.objective_value < 0):
            raise ValueError("an optimal solve must report a nonnegative objective value")
        return self


class PrivacyReport(BaseModel):
    """Result of the exhaustive geo-indistinguishability check."""

    model_config = ConfigDict(ser_json_inf_nan="constants")

    satisfied: bool
    max_log_violation: float = Field(ge=0.0)
    worst_triple: tuple[str, str, str] | None = None
    triples_checked: int = Field(ge=0)
    infinite_violations: int = Field(default=0, ge=0)
    epsilon: float
    tol: float


class DilationSummary(BaseModel):
    """Serializable view of a dilation computation."""

    delta: float = Field(ge=1.0 - 1e-12)
    witness: tuple[str, str] | None = None
    witness_path: list[str] = Field(default_factory=list)
    edges: int = Field(ge=0)
    radius: float = Field(ge=0)


class MechanismDocument(BaseModel):
    """On-disk JSON form of a mechanism."""

    n: int = Field(ge=1)
    epsilon: float = Field(gt=0)
    ids: list[str]
    matrix: list[list[float]]


class RunConfig(BaseModel):
    """Fully resolved parameters of one mechanism build."""

    mode: Literal["exact", "reduced"] = "reduced"
    epsilon: float = Field(gt=0)
    radius: float | None = Field(default=None, gt=0)
    c: float | None = Field(default=None, gt=0)
    rho: float | None = Field(default=None, ge=0)
    delta: float | None = Field(default=None, ge=1.0, description="Fixed dilation; None means exact dilation")
    solver: Literal["builtin", "export"] = "builtin"
    locations: str | None = None
    prior: str | None = None
    out: str | None = None
    report: str | None = None
    lp_out: str | None = None
    dump_constraints: str | None = None
    seed: int | None = Field(default=None, description="Sampling seed read by sample --config")

    @model_validator(mode="after")
    def _radius_matches_mode(self) -> Self:
        given = (self.radius is not None) + (self.c is not None)
        if self.mode == "reduced" and given != 1:
            raise ValueError("reduced mode needs exactly one of radius or c")
        if self.mode == "exact" and given != 0:
            raise ValueError("exact mode takes neither radius nor c")
        if self.mode == "exact" and self.delta is not None:
            raise ValueError("exact mode takes no delta")
        return self


class SolveRunReport(BaseModel):
    """Report JSON written next to a solved (or exported) mechanism."""

    n: int
    mode: Literal["exact", "reduced"]
    R: float | None = None
    c: float | None = None
    delta: float
    rows: int
    objective: float | None = None
    iterations: int = 0
    wall_time_s: float = 0.0
    status: str
    config: RunConfig


class SweepRow(BaseModel):
    """One line of the benchmark sweep CSV."""

    n: int
    c: float | None = None
    R: float | None = None
    delta: float | None = None
    rows: int
    objective: float | None = None
    wall_time_s: float | None = None
    mode: Literal["exact", "reduced"]
    status: str
