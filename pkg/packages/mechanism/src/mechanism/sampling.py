"""Drawing reported locations from a mechanism."""

import numpy as np

from mechanism.channel import Mechanism


def sample(mech: Mechanism, x: int, rng_seed: int, count: int) -> np.ndarray:
    """Draw ``count`` reported location indices for true location ``x`` by inverse CDF.

    The draws depend only on the row and the seed.
    """
    if not 0 <= x < mech.n:
        raise IndexError(f"location index {x} out of range for {mech.n} locations")
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    cdf = np.cumsum(mech.matrix[x])
    cdf[-1] = 1.0
    uniforms = np.random.default_rng(rng_seed).random(count)
    return np.minimum(np.searchsorted(cdf, uniforms, side="right"), mech.n - 1)


def empirical_distribution(draws: np.ndarray, n: int) -> np.ndarray:
    """Return the frequency of each of the ``n`` indices in ``draws``."""
    values = np.asarray(draws, dtype=np.int64)
    if values.size == 0:
        raise ValueError("no draws given")
    if values.min() < 0 or values.max() >= n:
        raise ValueError(f"draws must lie in [0, {n})")
    return np.bincount(values, minlength=n) / values.size
