"""Exchange of mechanism LPs with external solvers: CPLEX LP text out, ``name value`` solutions in."""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import pandas as pd
from pandas.errors import EmptyDataError

from core.enums import SolverKind, SolveStatus
from core.errors import InfeasibleSolutionError
from core.schemas import SolveReport
from lp.program import LinearProgram, check_feasibility

logger = logging.getLogger(__name__)

IMPORT_FEAS_TOL = 1e-7
SECTIONS = {"minimize": "objective", "subject to": "rows", "bounds": "bounds", "end": "end"}
TERM_PATTERN = re.compile(r"^([+-])?\s*([0-9.eE+-]+)?\s*([A-Za-z_][A-Za-z0-9_.]*)$")


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def _term(coef: float, name: str, first: bool) -> str:
    sign = "-" if coef < 0 else "+"
    magnitude = _fmt(abs(coef))
    if first:
        return f"{'-' if coef < 0 else ''}{magnitude} {name}"
    return f"{sign} {magnitude} {name}"


def _row_lines(name: str, terms: list[tuple[float, str]], sense: str, rhs: float) -> list[str]:
    lines = [f" {name}: {_term(terms[0][0], terms[0][1], first=True)}"]
    lines.extend(f"   {_term(coef, var, first=False)}" for coef, var in terms[1:])
    lines.append(f"   {sense} {_fmt(rhs)}")
    return lines


def export_lp(lp: LinearProgram, path: Path) -> None:
    """Write ``lp`` in CPLEX LP format, one term per line, deterministically.

    Rows are named ``norm_{x}`` and ``priv_{a}_{b}_{y}``, variables ``p_{x}_{y}``.
    """
    lp.check_names()
    names = lp.variable_names()
    lines = [f"\\ mechanism LP: {lp.n} locations, {lp.num_ineq_rows} privacy rows", "Minimize"]

    objective = [(float(coef), names[j]) for j, coef in enumerate(lp.objective) if coef != 0.0]
    if not objective:
        objective = [(0.0, names[0])]
    lines.append(f" obj: {_term(objective[0][0], objective[0][1], first=True)}")
    lines.extend(f"   {_term(coef, var, first=False)}" for coef, var in objective[1:])

    lines.append("Subject To")
    eq = lp.eq_matrix
    for row, row_name in enumerate(lp.eq_row_names()):
        start, stop = eq.indptr[row], eq.indptr[row + 1]
        entries = sorted(zip(eq.indices[start:stop].tolist(), eq.data[start:stop].tolist()))
        lines.extend(_row_lines(row_name, [(float(c), names[j]) for j, c in entries], "=", 1.0))

    cs = lp.constraints
    for row_name, a, b, y, mult in zip(lp.ineq_row_names(), cs.a.tolist(), cs.b.tolist(), cs.y.tolist(), cs.mult.tolist()):
        terms = [(1.0, names[lp.variable_index(a, y)]), (-mult, names[lp.variable_index(b, y)])]
        lines.extend(_row_lines(row_name, terms, "<=", 0.0))

    lines.append("Bounds")
    lines.extend(f" {name} >= 0" for name in names)
    lines.append("End")

    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")
    logger.info("Exported LP with %d variables and %d rows to %s", lp.num_variables, lp.num_rows, path)


@dataclass
class ParsedRow:
    """One constraint read back from an LP file."""

    terms: dict[str, float]
    sense: str
    rhs: float


@dataclass
class ParsedLP:
    """Content of an LP file as written by export_lp."""

    objective: dict[str, float] = field(default_factory=dict)
    rows: dict[str, ParsedRow] = field(default_factory=dict)
    lower_bounds: dict[str, float] = field(default_factory=dict)


def _parse_term(text: str) -> tuple[float, str]:
    match = TERM_PATTERN.match(text.strip())
    if match is None:
        raise ValueError(f"cannot parse LP term {text!r}")
    sign, coef, name = match.groups()
    value = float(coef) if coef else 1.0
    return (-value if sign == "-" else value), name


def read_lp(path: Path) -> ParsedLP:
    """Parse the subset of CPLEX LP format written by export_lp."""
    parsed = ParsedLP()
    section = None
    current: tuple[str, dict[str, float]] | None = None

    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("\\"):
            continue
        if line.lower() in SECTIONS:
            section = SECTIONS[line.lower()]
            continue
        if section == "objective":
            if ":" in line:
                line = line.split(":", 1)[1]
            coef, name = _parse_term(line)
            parsed.objective[name] = parsed.objective.get(name, 0.0) + coef
        elif section == "rows":
            if ":" in line:
                row_name, line = (part.strip() for part in line.split(":", 1))
                current = (row_name, {})
            if current is None:
                raise ValueError(f"constraint term outside a named row: {raw!r}")
            sense_match = re.match(r"^(<=|>=|=)\s*(\S+)$", line)
            if sense_match:
                parsed.rows[current[0]] = ParsedRow(terms=current[1], sense=sense_match.group(1), rhs=float(sense_match.group(2)))
                current = None
            else:
                coef, name = _parse_term(line)
                current[1][name] = current[1].get(name, 0.0) + coef
        elif section == "bounds":
            name, _, bound = line.partition(">=")
            parsed.lower_bounds[name.strip()] = float(bound)
        elif section is None:
            raise ValueError(f"LP file {path} has content before the Minimize section")
    if current is not None:
        raise ValueError(f"LP file {path} ends inside row {current[0]}")
    return parsed


def write_solution(lp: LinearProgram, solution: np.ndarray, path: Path) -> None:
    """Write ``solution`` as ``name value`` lines with an objective comment."""
    values = np.asarray(solution, dtype=np.float64)
    if values.shape != (lp.num_variables,):
        raise ValueError(f"solution has shape {values.shape}, expected ({lp.num_variables},)")
    lines = [f"# Objective value = {_fmt(float(lp.objective @ values))}"]
    lines.extend(f"{name} {_fmt(value)}" for name, value in zip(lp.variable_names(), values.tolist()))
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")


def import_solution(path: Path, lp: LinearProgram) -> tuple[np.ndarray, SolveReport]:
    """Read an external solver's ``name value`` solution for ``lp`` and re-check its feasibility."""
    if not path.exists():
        raise FileNotFoundError(f"solution file not found: {path}")
    try:
        frame = pd.read_csv(path, sep=r"\s+", comment="#", header=None, names=["name", "value"], dtype={"name": str, "value": float}, float_precision="round_trip")
    except EmptyDataError:
        frame = pd.DataFrame({"name": pd.Series(dtype=str), "value": pd.Series(dtype=float)})
    except ValueError as e:
        raise ValueError(f"cannot parse solution file {path}: {e}") from e

    duplicated = sorted(frame.loc[frame["name"].duplicated(), "name"].unique())
    if duplicated:
        raise ValueError(f"solution file lists variables more than once: {', '.join(duplicated)}")
    lp.check_names()
    names = lp.variable_names()
    known = set(names)
    unknown = sorted(set(frame["name"]) - known)
    if unknown:
        raise ValueError(f"solution file has unknown variables: {', '.join(unknown)}")
    present = set(frame["name"])
    missing = [name for name in names if name not in present]
    if missing:
        raise ValueError(f"solution file is missing variables: {', '.join(missing)}")

    solution = frame.set_index("name")["value"].reindex(names).to_numpy(dtype=np.float64)
    not_finite = [name for name, value in zip(names, solution.tolist()) if not math.isfinite(value)]
    if not_finite:
        shown = ", ".join(not_finite[:5])
        raise InfeasibleSolutionError(f"imported solution from {path} has {len(not_finite)} non-numeric values ({shown})", math.inf)
    violation = check_feasibility(lp, solution)
    if violation > IMPORT_FEAS_TOL:
        raise InfeasibleSolutionError(f"imported solution from {path} is infeasible", violation)

    objective = max(0.0, float(lp.objective @ solution))
    logger.info("Imported solution from %s with objective %.12g", path, objective)
    return solution, SolveReport(status=SolveStatus.OPTIMAL, objective_value=objective, solver=SolverKind.EXTERNAL, max_violation=violation)
