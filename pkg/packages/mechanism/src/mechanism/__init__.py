"""Obfuscation mechanisms and their privacy and utility checks."""

from mechanism.channel import Mechanism, identity_mechanism, uniform_mechanism
from mechanism.sampling import empirical_distribution, sample
from mechanism.store import load_mechanism, save_mechanism
from mechanism.utility import utility_loss
from mechanism.verify import verify_privacy

__all__ = [
    "Mechanism",
    "empirical_distribution",
    "identity_mechanism",
    "load_mechanism",
    "sample",
    "save_mechanism",
    "uniform_mechanism",
    "utility_loss",
    "verify_privacy",
]
