"""Deterministic counter-based random number generation.

All seeded randomness in the package (block right-hand sides, test inputs)
flows through ``uniform`` so that the same seed reproduces bit-identical
streams on any platform or language. The generator is SplitMix64 used in
counter mode: sample ``k`` (0-based) of stream ``seed`` is

    x = (seed + (k + 1) * 0x9E3779B97F4A7C15) mod 2^64
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9   mod 2^64
    x = (x ^ (x >> 27)) * 0x94D049BB133111EB   mod 2^64
    x =  x ^ (x >> 31)
    u = (x >> 11) * 2^-53          # uniform in [0, 1)

There is no hidden state; any sample can be produced independently.
"""

import numpy as np

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def uniform(seed, count, offset=0):
    """Return ``count`` uniform [0, 1) samples of stream ``seed``.

    ``offset`` skips that many leading samples, so disjoint chunks of one
    stream can be generated independently:
    ``uniform(s, n)`` followed by ``uniform(s, m, offset=n)`` equals
    ``uniform(s, n + m)``.
    """
    if count < 0 or offset < 0:
        raise ValueError("count and offset must be nonnegative")
    idx = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    x = np.uint64(seed & 0xFFFFFFFFFFFFFFFF) + idx * _GOLDEN
    x = (x ^ (x >> np.uint64(30))) * _MIX1
    x = (x ^ (x >> np.uint64(27))) * _MIX2
    x = x ^ (x >> np.uint64(31))
    return (x >> np.uint64(11)).astype(np.float64) * 2.0**-53


def uniform_matrix(seed, rows, cols, offset=0):
    """Uniform [0, 1) matrix filled row-major from stream ``seed``."""
    return uniform(seed, rows * cols, offset=offset).reshape(rows, cols)
