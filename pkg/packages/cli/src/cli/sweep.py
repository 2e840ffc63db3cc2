"""Benchmark sweep over grid sizes and spanner ratios, written as one CSV row per instance."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import Literal

import pandas as pd

from cli.pipeline import OUT_OF_RANGE, MechanismPipeline
from core.config import Settings
from core.enums import SweepStatus
from core.errors import DisconnectedGraphError, SolverError
from core.schemas import RunConfig, SweepRow
from geometry.locations import build_grid
from geometry.prior import uniform_prior

logger = logging.getLogger(__name__)

COLUMNS = list(SweepRow.model_fields)


@dataclass(frozen=True)
class SweepTask:
    """One instance of the sweep; ``c`` is None for the exact instance of a grid."""

    side: int
    c: float | None
    epsilon: float
    spacing: float = 1.0
    solver: Literal["builtin", "export"] = "builtin"
    lp_dir: str | None = None

    @property
    def n(self) -> int:
        """Return the number of locations."""
        return self.side * self.side

    @property
    def mode(self) -> Literal["exact", "reduced"]:
        """Return exact or reduced."""
        return "exact" if self.c is None else "reduced"

    def lp_path(self) -> str | None:
        """Return where export mode writes this instance's LP."""
        if self.lp_dir is None:
            return None
        suffix = "exact" if self.c is None else f"c{self.c:g}"
        return str(Path(self.lp_dir) / f"grid{self.side}x{self.side}_{suffix}.lp")


def sweep_tasks(
    sizes: Sequence[int],
    ratios: Sequence[float],
    epsilon: float,
    exact: bool = False,
    spacing: float = 1.0,
    solver: Literal["builtin", "export"] = "builtin",
    lp_dir: str | None = None,
) -> list[SweepTask]:
    """Return the tasks in canonical order: per grid size, every ratio then the exact instance."""
    tasks = []
    for side in sizes:
        if side < 1:
            raise ValueError(f"grid sizes must be positive, got {side}")
        tasks.extend(SweepTask(side=side, c=c, epsilon=epsilon, spacing=spacing, solver=solver, lp_dir=lp_dir) for c in ratios)
        if exact:
            tasks.append(SweepTask(side=side, c=None, epsilon=epsilon, spacing=spacing, solver=solver, lp_dir=lp_dir))
    return tasks


def check_sweep_range(tasks: Sequence[SweepTask], settings: Settings) -> None:
    """Refuse the whole sweep when any builtin instance is too large."""
    pipeline = MechanismPipeline(settings)
    for task in tasks:
        if task.solver == "builtin":
            pipeline.check_range(task.n, task.mode)


def run_task(task: SweepTask, settings: Settings) -> SweepRow:
    """Build and solve (or export) one sweep instance; failures become the row's status."""
    locs = build_grid(task.side, task.side, task.spacing)
    config = RunConfig(mode=task.mode, epsilon=task.epsilon, c=task.c, solver=task.solver, lp_out=task.lp_path())
    pipeline = MechanismPipeline(settings)
    try:
        reduction = pipeline.reduce(locs, config)
    except DisconnectedGraphError as e:
        logger.warning("Sweep instance %dx%d c=%s: %s", task.side, task.side, task.c, e)
        return SweepRow(n=task.n, c=task.c, rows=0, mode=task.mode, status=SweepStatus.DISCONNECTED.value)
    try:
        result = pipeline.run(locs, uniform_prior(task.n), config, reduction=reduction)
    except SolverError as e:
        logger.error("Sweep instance %dx%d c=%s: %s", task.side, task.side, task.c, e)
        return SweepRow(
            n=task.n,
            c=task.c,
            R=reduction.radius,
            delta=reduction.delta,
            rows=len(reduction.constraints),
            mode=task.mode,
            status=SweepStatus.SOLVER_FAILURE.value,
        )

    reduction = result.reduction
    objective = result.report.objective_value if result.report is not None else None
    status = SweepStatus.OK if result.report is not None else SweepStatus.EXPORTED
    logger.info("Sweep instance %dx%d %s: %d rows, objective %s", task.side, task.side, task.mode, result.rows, objective)
    return SweepRow(
        n=task.n,
        c=task.c,
        R=reduction.radius,
        delta=reduction.delta,
        rows=result.rows,
        objective=objective,
        wall_time_s=result.wall_time_s,
        mode=task.mode,
        status=status.value,
    )


def run_sweep(tasks: Sequence[SweepTask], settings: Settings, jobs: int = 1) -> list[SweepRow]:
    """Run every task, in a process pool when ``jobs > 1``; rows come back in task order."""
    check_sweep_range(tasks, settings)
    worker = partial(run_task, settings=settings)
    if jobs <= 1:
        return [worker(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, tasks))


def write_sweep(rows: Sequence[SweepRow], path: Path | None, omit_timing: bool = False) -> str:
    """Render the sweep CSV (``n,c,R,delta,rows,objective,wall_time_s,mode,status``) and write it to ``path``."""
    records = [row.model_dump() for row in rows]
    if omit_timing:
        for record in records:
            record["wall_time_s"] = None
    frame = pd.DataFrame.from_records(records, columns=COLUMNS)
    text = frame.to_csv(index=False, float_format="%.12g", lineterminator="\n")
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    return text

