"""Indexed planar location sets under the Euclidean metric."""

from __future__ import annotations

import math
import re
from collections.abc import Sequence

import numpy as np
from numpy.typing import ArrayLike
from scipy.spatial.distance import cdist

ID_PATTERN = re.compile(r"^[A-Za-z0-9_.]+$")


class LocationSet:
    """Ordered, immutable set of distinct planar points.

    Position ``i`` always refers to ``ids[i]``; that order is the canonical matrix order for every
    downstream constraint, variable, and mechanism row.

    Parameters
    ----------
    ids
        Unique identifiers, restricted to ``[A-Za-z0-9_.]`` so they can be embedded in LP names.
    coords
        ``(n, 2)`` array of finite coordinates, no two points equal.
    spacing
        Distance between adjacent grid points when the set is a regular grid, else ``None``.
    """

    def __init__(self, ids: Sequence[str], coords: ArrayLike, spacing: float | None = None) -> None:
        id_tuple = tuple(str(i) for i in ids)
        points = np.array(coords, dtype=np.float64)
        if points.size == 0 or not id_tuple:
            raise ValueError("a location set needs at least one point")
        points = points.reshape(-1, 2)
        if len(id_tuple) != len(points):
            raise ValueError(f"got {len(id_tuple)} ids for {len(points)} points")
        if len(set(id_tuple)) != len(id_tuple):
            dupes = sorted({i for i in id_tuple if id_tuple.count(i) > 1})
            raise ValueError(f"duplicate location ids: {', '.join(dupes)}")
        bad_ids = [i for i in id_tuple if not ID_PATTERN.match(i)]
        if bad_ids:
            raise ValueError(f"location ids may only contain letters, digits, '_' and '.': {', '.join(bad_ids)}")
        if not np.all(np.isfinite(points)):
            raise ValueError("location coordinates must be finite")
        if len(np.unique(points, axis=0)) != len(points):
            raise ValueError("location coordinates must be distinct")
        if spacing is not None and not (math.isfinite(spacing) and spacing > 0):
            raise ValueError(f"grid spacing must be positive, got {spacing}")

        points.setflags(write=False)
        self._ids = id_tuple
        self._coords = points
        self._spacing = spacing
        self._index = {loc_id: i for i, loc_id in enumerate(id_tuple)}
        self._distances: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self._ids)

    def __repr__(self) -> str:
        return f"LocationSet(n={len(self)}, spacing={self._spacing})"

    @property
    def n(self) -> int:
        """Return the number of locations."""
        return len(self._ids)

    @property
    def ids(self) -> tuple[str, ...]:
        """Return the location ids in index order."""
        return self._ids

    @property
    def coords(self) -> np.ndarray:
        """Return the read-only ``(n, 2)`` coordinate array."""
        return self._coords

    @property
    def spacing(self) -> float | None:
        """Return the grid spacing, or None for arbitrary point sets."""
        return self._spacing

    def index_of(self, loc_id: str) -> int:
        """Return the index of a location id."""
        try:
            return self._index[loc_id]
        except KeyError as e:
            raise KeyError(f"unknown location id: {loc_id}") from e

    def distance_matrix(self) -> np.ndarray:
        """Return the read-only symmetric matrix of pairwise Euclidean distances."""
        if self._distances is None:
            matrix = cdist(self._coords, self._coords)
            # cdist evaluates (a, b) and (b, a) separately; keep the matrix exactly symmetric
            matrix = np.minimum(matrix, matrix.T)
            np.fill_diagonal(matrix, 0.0)
            matrix.setflags(write=False)
            self._distances = matrix
        return self._distances

    def with_spacing(self, spacing: float | None) -> LocationSet:
        """Return a copy with grid provenance set (or cleared)."""
        return LocationSet(self._ids, self._coords, spacing=spacing)


def build_grid(rows: int, cols: int, spacing: float = 1.0) -> LocationSet:
    """Build a ``rows x cols`` grid of points at ``(j * spacing, i * spacing)``.

    Ids are ``"{i}_{j}"`` in row-major order.
    """
    if rows < 1 or cols < 1:
        raise ValueError(f"grid dimensions must be positive, got {rows}x{cols}")
    if not (math.isfinite(spacing) and spacing > 0):
        raise ValueError(f"grid spacing must be positive, got {spacing}")
    ii, jj = np.meshgrid(np.arange(rows), np.arange(cols), indexing="ij")
    coords = np.column_stack([jj.ravel() * spacing, ii.ravel() * spacing])
    ids = [f"{i}_{j}" for i, j in zip(ii.ravel(), jj.ravel())]
    return LocationSet(ids, coords, spacing=spacing)


def distance(locs: LocationSet, a: int, b: int) -> float:
    """Return the Euclidean distance between locations ``a`` and ``b``."""
    n = len(locs)
    for idx in (a, b):
        if not 0 <= idx < n:
            raise IndexError(f"location index {idx} out of range for {n} locations")
    return float(locs.distance_matrix()[a, b])


def covering_radius(locs: LocationSet) -> float:
    """Return the covering radius of a grid: the distance from a cell center to its corners.

    A single point is a 1x1 grid with radius 0; other sets need the spacing only grid-generated sets carry.
    """
    if len(locs) == 1:
        return 0.0
    if locs.spacing is None:
        raise ValueError("covering radius unavailable; supply rho explicitly")
    xs = np.unique(locs.coords[:, 0])
    ys = np.unique(locs.coords[:, 1])
    if len(xs) == 1 or len(ys) == 1:
        # a single row or column: the hull is a segment
        return locs.spacing / 2
    return locs.spacing / math.sqrt(2)


def infer_grid_spacing(locs: LocationSet, rel_tol: float = 1e-9) -> float | None:
    """Return the spacing if the points form a complete axis-aligned lattice, else None."""
    xs = np.unique(locs.coords[:, 0])
    ys = np.unique(locs.coords[:, 1])
    if len(xs) * len(ys) != len(locs) or len(locs) == 1:
        return None
    steps = np.concatenate([np.diff(xs), np.diff(ys)])
    spacing = float(steps[0])
    if not np.allclose(steps, spacing, rtol=rel_tol, atol=0.0):
        return None
    return spacing


def relabel(locs: LocationSet, order: Sequence[int]) -> LocationSet:
    """Return the same points listed in a new order: new position ``i`` holds old point ``order[i]``."""
    perm = np.asarray(order, dtype=np.int64)
    if sorted(perm.tolist()) != list(range(len(locs))):
        raise ValueError("order must be a permutation of the location indices")
    return LocationSet([locs.ids[k] for k in perm], locs.coords[perm], spacing=locs.spacing)


def rotate_grid_permutation(size: int) -> np.ndarray:
    """Return ``perm`` mapping each index of a ``size x size`` grid to the index of its 90° rotation."""
    if size < 1:
        raise ValueError(f"grid size must be positive, got {size}")
    ii, jj = np.meshgrid(np.arange(size), np.arange(size), indexing="ij")
    return (jj * size + (size - 1 - ii)).ravel()
