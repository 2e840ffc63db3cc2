"""Location sets, metrics, grids, covering radius, and priors."""

from geometry.levels import epsilon_for_level, resolve_radius
from geometry.loader import load_locations, save_locations
from geometry.locations import (
    LocationSet,
    build_grid,
    covering_radius,
    distance,
    infer_grid_spacing,
    relabel,
    rotate_grid_permutation,
)
from geometry.prior import Prior, load_prior, save_prior, uniform_prior

__all__ = [
    "LocationSet",
    "Prior",
    "build_grid",
    "covering_radius",
    "distance",
    "epsilon_for_level",
    "infer_grid_spacing",
    "load_locations",
    "load_prior",
    "relabel",
    "resolve_radius",
    "rotate_grid_permutation",
    "save_locations",
    "save_prior",
    "uniform_prior",
]
