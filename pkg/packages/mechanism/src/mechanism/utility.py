"""Expected distance between true and reported location."""

import numpy as np

from geometry.locations import LocationSet
from geometry.prior import Prior
from mechanism.channel import Mechanism


def utility_loss(mech: Mechanism, prior: Prior, locs: LocationSet) -> float:
    """Return the sum over x, y of pi(x) p(y|x) d(x, y)."""
    mech.check_bound_to(locs)
    if len(prior) != mech.n:
        raise ValueError(f"prior has {len(prior)} entries but the mechanism has {mech.n} locations")
    return float(np.sum(prior.probs[:, np.newaxis] * mech.matrix * locs.distance_matrix()))
