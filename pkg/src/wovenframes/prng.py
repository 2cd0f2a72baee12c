"""
SplitMix64 pseudorandom generator.

This is the generator behind every seeded command, and its output stream
is part of the file-format contract: the same seed must give the same
frames forever.

State advance and output, all arithmetic modulo ``2**64``::

    state = state + 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output = z ^ (z >> 31)

A uniform double on ``[-1, 1)`` is ``2 * (output >> 11) * 2**-53 - 1``.
"""
from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Uniform double in ``[0, 1)`` from the top 53 bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def symmetric(self) -> float:
        """Uniform double in ``[-1, 1)``."""
        return 2.0 * self.uniform() - 1.0

    def symmetric_array(self, shape) -> np.ndarray:
        """Row-major fill of an array with :meth:`symmetric` draws."""
        size = int(np.prod(shape))
        return np.array([self.symmetric() for _ in range(size)]).reshape(shape)
