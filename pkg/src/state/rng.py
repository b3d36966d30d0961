# -*- coding: utf-8 -*-
"""
Replayable random streams.

Every stream is a numpy ``Philox`` generator (counter-based, 64-bit output
words) keyed through ``SeedSequence(seed, spawn_key=path)``. The path names
the stream inside an experiment, e.g. ``stream(seed, trial, cycle)``, so
streams are independent of each other and of the order they are created in.
"""

from typing import Union

import numpy as np

MASK64 = (1 << 64) - 1

SeedLike = Union[int, np.random.Generator]


def stream(seed: int, *path: int) -> np.random.Generator:
    if seed < 0 or seed > MASK64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    if any(p < 0 for p in path):
        raise ValueError(f"stream path entries must be non-negative, got {path}")
    seq = np.random.SeedSequence(entropy=seed, spawn_key=tuple(int(p) for p in path))
    return np.random.Generator(np.random.Philox(seq))


def as_generator(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return stream(int(seed))


def randbelow(gen: np.random.Generator, n: int) -> int:
    """Uniform integer in [0, n), exact for any n, by rejection on raw 64-bit words."""
    if n <= 0:
        raise ValueError(f"randbelow needs a positive bound, got {n}")
    if n == 1:
        return 0
    k = (n - 1).bit_length()
    words = (k + 63) // 64
    shift = words * 64 - k
    while True:
        draw = 0
        for word in gen.bit_generator.random_raw(words):
            draw = (draw << 64) | int(word)
        draw >>= shift
        if draw < n:
            return draw


def derive_seed(seed: int, *path: int) -> int:
    """A 64-bit seed for the sub-stream at ``path``; recorded in events so a single step can be replayed."""
    if seed < 0 or seed > MASK64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    seq = np.random.SeedSequence(entropy=seed, spawn_key=tuple(int(p) for p in path))
    return int(seq.generate_state(1, dtype=np.uint64)[0])
