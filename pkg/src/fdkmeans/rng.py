"""Deterministic random-stream plumbing.

All randomized operations take a ``numpy.random.Generator`` (or anything
``numpy.random.default_rng`` accepts, e.g. an integer seed).  PCG64 draws are
platform independent, so a fixed seed reproduces every experiment bit for bit.
Independent child streams are split from one experiment seed with
``SeedSequence`` spawn keys, so adding methods or replicates never perturbs
the streams of existing ones.
"""

import numpy as np


def as_generator(rng):
    """Return ``rng`` as a ``numpy.random.Generator``.

    Accepts a Generator (returned unchanged), an int seed, a SeedSequence,
    or None (fresh OS entropy).
    """
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def child_rng(seed, *key):
    """Deterministic child generator for integer seed ``seed`` and spawn key ``key``."""
    ss = np.random.SeedSequence(seed, spawn_key=tuple(int(k) for k in key))
    return np.random.default_rng(ss)
