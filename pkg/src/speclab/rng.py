"""Seeded random streams.

Every stochastic routine in the package draws from a counter-based Philox
generator keyed by an explicit seed.  Multi-stream consumers (ensemble
members, bootstrap resamples, Monte Carlo batches) derive independent
sub-streams from one root seed through SeedSequence spawn keys, so runs
are reproducible and streams never alias.
"""

from __future__ import annotations

import numpy as np

# named sub-stream slots under one root seed
STREAM_ENSEMBLE = 0
STREAM_STATE = 1
STREAM_OBSERVABLE = 2
STREAM_BOOTSTRAP = 3
STREAM_TRIALS = 4


def philox(seed: int, *spawn_key: int) -> np.random.Generator:
    """Generator for the given root seed and optional sub-stream key."""
    seq = np.random.SeedSequence(seed, spawn_key=tuple(spawn_key))
    return np.random.Generator(np.random.Philox(seq))


def child_sequences(seed: int, n: int) -> list[np.random.SeedSequence]:
    """n independent child sequences of one root seed."""
    return np.random.SeedSequence(seed).spawn(n)
