"""Read and write location CSV files."""

from __future__ import annotations

import logging
from pathlib import Path

import numpy as np
import pandas as pd

from geometry.locations import LocationSet, infer_grid_spacing

logger = logging.getLogger(__name__)

COLUMNS = ["id", "x", "y"]


def load_locations(path: Path, spacing: float | None = None, infer_spacing: bool = True) -> LocationSet:
    """Load an ``id,x,y`` CSV into a LocationSet.

    When ``spacing`` is not given and the points form a complete lattice, the spacing is inferred so that
    grid files written by ``save_locations`` keep their covering radius.
    """
    if not path.exists():
        raise FileNotFoundError(f"locations file not found: {path}")
    frame = pd.read_csv(path, dtype={"id": str}, float_precision="round_trip")
    if list(frame.columns) != COLUMNS:
        raise ValueError(f"locations file {path} must have header 'id,x,y', got {','.join(map(str, frame.columns))}")
    if frame.empty:
        raise ValueError(f"locations file {path} has no points")
    coords = frame[["x", "y"]].to_numpy(dtype=np.float64)
    locs = LocationSet(frame["id"].tolist(), coords)
    if spacing is None and infer_spacing:
        spacing = infer_grid_spacing(locs)
        if spacing is not None:
            logger.debug("Inferred grid spacing %s for %s", spacing, path)
    return locs.with_spacing(spacing) if spacing is not None else locs


def save_locations(locs: LocationSet, path: Path) -> None:
    """Write a LocationSet as an ``id,x,y`` CSV with full-precision coordinates."""
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame({"id": list(locs.ids), "x": locs.coords[:, 0], "y": locs.coords[:, 1]})
    frame.to_csv(path, index=False, float_format="%.17g", lineterminator="\n")
