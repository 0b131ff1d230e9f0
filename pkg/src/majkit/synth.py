"""Depth-two majority circuits for MAJ_n with fan-in about 2n/3.

Layout of :func:`synthesize` for ``n = 3m + r``: the lowest ``m + r`` inputs
are copied by singleton gates, the remaining ``2m`` inputs form the block
``M`` and feed a ladder of consecutive thresholds ``[sum_M >= t]``.  The
output gate is a plain majority over all first-level gates.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .core import (
    BitVector,
    DepthTwoCircuit,
    ThresholdGate,
    circuit_eval,
)

DEFAULT_VERIFY_LIMIT = 24


class VerificationRefused(ValueError):
    """The circuit has too many inputs for an exhaustive check."""


def ceil_div(a: int, b: int) -> int:
    # exact for negative a as well
    return -((-a) // b)


class LadderLevel(Sequence):
    """First level made of copy gates followed by a threshold ladder.

    Gates ``0..singles-1`` copy inputs ``0..singles-1``; gate
    ``singles + i`` is ``[sum over inputs singles..n-1 >= base + i]``.
    Gates are built on access, so a circuit for large n costs O(1).
    """

    def __init__(self, n: int, singles: int, base: int = 0, ladder: int = 0):
        self.n, self.singles, self.base, self.ladder = n, singles, base, ladder
        self.block = range(singles, n)
        self.max_input = n - 1
        self.max_fan_in = max(min(singles, 1), len(self.block) if ladder else 0)

    def __len__(self):
        return self.singles + self.ladder

    def __getitem__(self, j):
        if isinstance(j, slice):
            return tuple(self[i] for i in range(*j.indices(len(self))))
        if j < 0:
            j += len(self)
        if not 0 <= j < len(self):
            raise IndexError(j)
        if j < self.singles:
            return ThresholdGate((j,), None, 1)
        return ThresholdGate(self.block, None, self.base + j - self.singles)


def _majority_output(g: int) -> ThresholdGate:
    return ThresholdGate(range(g), None, ceil_div(g, 2))


def synthesize(n: int) -> DepthTwoCircuit:
    if n < 1:
        raise ValueError("synthesize needs n >= 1")
    m, r = divmod(n, 3)
    if r == 0:
        singles, base, ladder = m, ceil_div(n, 6), m + 1
    elif r == 1:
        singles, base, ladder = m + 1, ceil_div(m - 1, 2), m + 2
    else:
        # ceil(m/2 - 1) == ceil((m - 2)/2); -1 when m == 0
        singles, base, ladder = m + 2, ceil_div(m - 2, 2), m + 3
    level = LadderLevel(n, singles, base, ladder)
    g = len(level)
    return DepthTwoCircuit(n, level, _majority_output(g), declared_k=g)


def trivial_circuit(n: int) -> DepthTwoCircuit:
    """One copy gate per input and a majority on top; needs fan-in n."""
    if n < 1:
        raise ValueError("trivial_circuit needs n >= 1")
    return DepthTwoCircuit(n, LadderLevel(n, n), _majority_output(n), declared_k=n)


@dataclass(frozen=True)
class Verdict:
    equivalent: bool
    counterexample: BitVector | None = None

    def __bool__(self):
        return self.equivalent


def _compile(gate: ThresholdGate, width: int):
    # inputs grouped by weight; wire i sits at bit (width - 1 - i)
    groups: dict[int, int] = defaultdict(int)
    for i, w in zip(gate.inputs, gate.weights):
        groups[w] |= 1 << (width - 1 - i)
    return tuple(groups.items()), gate.threshold


def _fire(compiled, v: int) -> bool:
    groups, t = compiled
    return sum(w * (v & mask).bit_count() for w, mask in groups) >= t


def verify_exhaustive(c: DepthTwoCircuit, limit_n: int = DEFAULT_VERIFY_LIMIT) -> Verdict:
    """Compare ``c`` with MAJ_n on all 2^n inputs in lexicographic order.

    Returns the first input (index 0 most significant) on which they differ.
    """
    n = c.n
    if n > limit_n:
        raise VerificationRefused(f"n={n} exceeds the exhaustive limit {limit_n}")
    first = [_compile(g, n) for g in c.first_level]
    g = len(first)
    out = _compile(c.output, g)
    for v in range(1 << n):
        level = 0
        for j, cg in enumerate(first):
            if _fire(cg, v):
                level |= 1 << (g - 1 - j)
        if _fire(out, level) != (2 * v.bit_count() >= n):
            witness = BitVector.from_int(v, n)
            # the compiled path must agree with the reference evaluator
            assert circuit_eval(c, witness) != (2 * v.bit_count() >= n)
            return Verdict(False, witness)
    return Verdict(True)


def majority_table(n: int) -> np.ndarray:
    """Truth table of MAJ_n indexed by the integer encoding of x."""
    counts = np.array([v.bit_count() for v in range(1 << n)], dtype=np.int64)
    return (2 * counts >= n).astype(np.uint8)


def boundary_edges(table: Sequence[int], n: int) -> int:
    """Number of hypercube edges whose two endpoints get different values."""
    if n > 20:
        raise ValueError("boundary_edges supports n <= 20")
    f = np.asarray(table, dtype=np.uint8).ravel()
    if f.size != 1 << n:
        raise ValueError(f"truth table has {f.size} entries, expected {1 << n}")
    total = 0
    for i in range(n):
        # pair entries that differ only in bit i of the table index
        pairs = f.reshape(-1, 2, 1 << i)
        total += int(np.count_nonzero(pairs[:, 0, :] != pairs[:, 1, :]))
    return total
