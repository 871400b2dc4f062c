"""
core/streams.py — Counter-keyed random streams.

Trial i of a run seeded with s always draws from the stream keyed by (s, i),
so results do not depend on batching, worker count or scheduling order.
"""
import numpy as np


def trial_stream(seed: int, index: int) -> np.random.Generator:
    """The independent generator for trial `index` of a run seeded with `seed`."""
    if seed < 0 or index < 0:
        raise ValueError(f"seed and index must be nonnegative, got seed={seed}, index={index}")
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))
