"""SplitMix64, used wherever the CLI needs reproducible random inputs.

Chosen over :mod:`random` so that the bit streams are trivial to reproduce
in any language: state += 0x9E3779B97F4A7C15, then two xor-shift-multiply
rounds and a final xor-shift.
"""

from __future__ import annotations

from .core import BitVector

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def bits(self, n: int) -> BitVector:
        """``n`` bits; bit ``i`` is bit ``i % 64`` of word ``i // 64``."""
        out = []
        while len(out) < n:
            word = self.next64()
            out.extend((word >> j) & 1 for j in range(min(64, n - len(out))))
        return BitVector(tuple(out))
