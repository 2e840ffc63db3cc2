"""Prior distributions over locations."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pandas as pd
from numpy.typing import ArrayLike

from geometry.locations import LocationSet

SUM_TOL = 1e-12
LOAD_SUM_TOL = 1e-9


class Prior:
    """Probability vector aligned to a LocationSet's index order."""

    def __init__(self, probs: ArrayLike) -> None:
        values = np.array(probs, dtype=np.float64).ravel()
        if values.size == 0:
            raise ValueError("a prior needs at least one entry")
        if not np.all(np.isfinite(values)) or np.any(values < 0):
            raise ValueError("prior entries must be finite and nonnegative")
        total = float(values.sum())
        if abs(total - 1.0) > SUM_TOL:
            raise ValueError(f"prior not normalized: sum is {total:.15g}")
        values.setflags(write=False)
        self._probs = values

    def __len__(self) -> int:
        return len(self._probs)

    def __repr__(self) -> str:
        return f"Prior(n={len(self)})"

    @property
    def probs(self) -> np.ndarray:
        """Return the read-only probability vector."""
        return self._probs


def uniform_prior(n: int) -> Prior:
    """Return the uniform prior over ``n`` locations."""
    if n < 1:
        raise ValueError(f"a prior needs at least one location, got n={n}")
    return Prior(np.full(n, 1.0 / n))


def load_prior(path: Path, locs: LocationSet) -> Prior:
    """Load an ``id,prob`` CSV and align it to ``locs``.

    The ids must cover the location set exactly; the probabilities must sum to one within 1e-9 and are
    renormalized afterwards.
    """
    frame = pd.read_csv(path, dtype={"id": str}, float_precision="round_trip")
    if list(frame.columns) != ["id", "prob"]:
        raise ValueError(f"prior file {path} must have header 'id,prob', got {','.join(map(str, frame.columns))}")
    duplicated = sorted(frame.loc[frame["id"].duplicated(), "id"].unique())
    if duplicated:
        raise ValueError(f"prior lists ids more than once: {', '.join(duplicated)}")

    given = set(frame["id"])
    missing = [loc_id for loc_id in locs.ids if loc_id not in given]
    if missing:
        raise ValueError(f"prior is missing ids: {', '.join(missing)}")
    extra = sorted(given - set(locs.ids))
    if extra:
        raise ValueError(f"prior has unknown ids: {', '.join(extra)}")

    probs = frame.set_index("id")["prob"].astype(np.float64).reindex(list(locs.ids)).to_numpy()
    negative = [loc_id for loc_id, p in zip(locs.ids, probs) if p < 0]
    if negative:
        raise ValueError(f"prior has negative probabilities for ids: {', '.join(negative)}")
    total = float(probs.sum())
    if abs(total - 1.0) > LOAD_SUM_TOL:
        raise ValueError(f"prior not normalized: sum is {total:.12g}")
    return Prior(probs / total)


def save_prior(prior: Prior, locs: LocationSet, path: Path) -> None:
    """Write a prior as an ``id,prob`` CSV."""
    if len(prior) != len(locs):
        raise ValueError(f"prior has {len(prior)} entries for {len(locs)} locations")
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame({"id": list(locs.ids), "prob": prior.probs})
    frame.to_csv(path, index=False, float_format="%.17g", lineterminator="\n")
