"""Seeded random streams.

Every sampler takes an explicit ``numpy.random.Generator`` so that runs are
reproducible from a recorded seed.
"""
import numpy as np

RNG_ALGORITHM = "PCG64"

# numpy's integer sampler works on int64
_NATIVE_BOUND = 1 << 62


def make_rng(seed: int | None = None) -> tuple[np.random.Generator, int]:
    """Return a PCG64 generator and the seed that reproduces it.

    Without an explicit seed, one is drawn from system entropy and returned
    so it can be reported.
    """
    if seed is None:
        seed = int(np.random.SeedSequence().entropy)
    if seed < 0:
        raise ValueError(f"Seed must be non-negative, got {seed}")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed))), seed


def randbelow(rng: np.random.Generator, bound: int) -> int:
    """Uniform integer in ``[0, bound)`` for bounds of any size."""
    if bound <= 0:
        raise ValueError(f"Bound must be positive, got {bound}")
    if bound < _NATIVE_BOUND:
        return int(rng.integers(bound))
    bits = bound.bit_length()
    nbytes = (bits + 7) // 8
    excess = nbytes * 8 - bits
    while True:
        value = int.from_bytes(rng.bytes(nbytes), "little") >> excess
        if value < bound:
            return value
