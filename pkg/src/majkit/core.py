"""Bit vectors, threshold gates and depth-two circuits.

Everything here is 0-based: input ``x_1`` of the usual 1-based notation is
``bits[0]``.  Majority ties are inclusive and always evaluated in integers
as ``2 * sum >= size``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class IndexOutOfRange(IndexError):
    """An index set refers to a position outside the ambient vector."""


@dataclass(frozen=True)
class BitVector:
    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(map(int, self.bits))
        if not {0, 1}.issuperset(bits):
            raise ValueError("bits must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @property
    def n(self) -> int:
        return len(self.bits)

    def __len__(self):
        return len(self.bits)

    def __getitem__(self, i):
        return self.bits[i]

    def __iter__(self):
        return iter(self.bits)

    def popcount(self) -> int:
        return sum(self.bits)

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        """Parse ``"0110"``; the leftmost character is index 0."""
        s = s.strip()
        if any(ch not in "01" for ch in s):
            raise ValueError(f"not a bitstring: {s!r}")
        return cls(tuple(int(ch) for ch in s))

    @classmethod
    def from_int(cls, value: int, n: int) -> "BitVector":
        """Index 0 is the most significant of the ``n`` low bits of ``value``."""
        return cls(tuple((value >> (n - 1 - i)) & 1 for i in range(n)))

    def to_int(self) -> int:
        v = 0
        for b in self.bits:
            v = (v << 1) | b
        return v

    def __str__(self):
        return "".join(map(str, self.bits))


def index_set(indices: Iterable[int], n: int | None = None) -> tuple[int, ...]:
    """Normalize ``indices`` to a sorted duplicate-free tuple.

    Duplicates and negative indices are rejected; with ``n`` given, so is
    anything ``>= n``.
    """
    items = list(map(int, indices))
    out = tuple(sorted(set(items)))
    if len(out) != len(items):
        raise ValueError(f"duplicate indices in {items}")
    if out and out[0] < 0:
        raise IndexOutOfRange(f"negative index {out[0]}")
    if n is not None and out and out[-1] >= n:
        raise IndexOutOfRange(f"index {out[-1]} out of range for n={n}")
    return out


def _bits(x) -> Sequence[int]:
    return x.bits if isinstance(x, BitVector) else x


def set_sum(x, S: Iterable[int]) -> int:
    bits = _bits(x)
    total = 0
    for i in S:
        if i < 0 or i >= len(bits):
            raise IndexOutOfRange(f"index {i} out of range for n={len(bits)}")
        total += bits[i]
    return total


def majority(x) -> int:
    """``[popcount(x) >= n/2]``; the empty vector gives 1."""
    bits = _bits(x)
    return int(2 * sum(bits) >= len(bits))


def maj_threshold(x, S: Iterable[int], t: int) -> int:
    return int(set_sum(x, S) >= t)


def maj_set(x, S: Iterable[int]) -> int:
    S = tuple(S)
    return int(2 * set_sum(x, S) >= len(S))


def _same_ints(a: Sequence[int], b: Sequence[int]) -> bool:
    if type(a) is type(b):
        return a == b
    return len(a) == len(b) and tuple(a) == tuple(b)


class ThresholdGate:
    """``[sum_i weights[i] * v[inputs[i]] >= threshold]`` with weights >= 1.

    ``inputs`` may be a tuple or a step-1 ``range``; ``weights=None`` means
    all ones.  A threshold <= 0 makes the gate constantly 1, a threshold
    above the fan-in makes it constantly 0; both are allowed.
    """

    __slots__ = ("inputs", "_weights", "threshold")

    def __init__(self, inputs: Sequence[int], weights: Sequence[int] | None, threshold: int):
        if isinstance(inputs, range):
            if inputs.step != 1 or (len(inputs) and inputs.start < 0):
                raise ValueError("range inputs must be nonnegative with step 1")
        else:
            inputs = tuple(int(i) for i in inputs)
            if index_set(inputs) != inputs:
                raise ValueError("gate inputs must be strictly increasing")
        if weights is not None:
            weights = tuple(int(w) for w in weights)
            if len(weights) != len(inputs):
                raise ValueError("inputs and weights differ in length")
            if any(w < 1 for w in weights):
                raise ValueError("weights must be positive integers")
            if all(w == 1 for w in weights):
                weights = None
        self.inputs = inputs
        self._weights = weights
        self.threshold = int(threshold)

    @classmethod
    def unweighted(cls, inputs: Iterable[int], threshold: int) -> "ThresholdGate":
        if not isinstance(inputs, range):
            inputs = tuple(inputs)
        return cls(inputs, None, threshold)

    @property
    def weights(self) -> tuple[int, ...]:
        return (1,) * len(self.inputs) if self._weights is None else self._weights

    @property
    def fan_in(self) -> int:
        return len(self.inputs) if self._weights is None else sum(self._weights)

    def __eq__(self, other):
        if not isinstance(other, ThresholdGate):
            return NotImplemented
        return (
            self.threshold == other.threshold
            and self._weights == other._weights
            and _same_ints(self.inputs, other.inputs)
        )

    def __hash__(self):
        return hash((tuple(self.inputs), self._weights, self.threshold))

    def __repr__(self):
        return f"ThresholdGate({tuple(self.inputs)}, {self.weights}, {self.threshold})"


def gate_eval(g: ThresholdGate, values) -> int:
    bits = _bits(values)
    if g.inputs and g.inputs[-1] >= len(bits):
        raise IndexOutOfRange(f"gate input {g.inputs[-1]} out of range for {len(bits)} values")
    if g._weights is None:
        total = sum(bits[i] for i in g.inputs)
    else:
        total = sum(w * bits[i] for i, w in zip(g.inputs, g._weights))
    return int(total >= g.threshold)


@dataclass(frozen=True, eq=False)
class DepthTwoCircuit:
    """First-level gates over the inputs and one output gate over the gates.

    ``first_level`` is any sequence of gates.  A sequence that also carries
    ``max_fan_in`` and ``max_input`` attributes (see
    :class:`majkit.synth.LadderLevel`) is validated from those without
    materializing its gates.
    """

    n: int
    first_level: Sequence[ThresholdGate]
    output: ThresholdGate
    declared_k: int

    def __post_init__(self):
        level = self.first_level
        if hasattr(level, "max_input"):
            if level.max_input >= self.n:
                raise ValueError(f"first level reads input {level.max_input} >= n={self.n}")
        else:
            level = tuple(level)
            object.__setattr__(self, "first_level", level)
            for j, g in enumerate(level):
                if g.inputs and g.inputs[-1] >= self.n:
                    raise ValueError(f"gate {j} reads input {g.inputs[-1]} >= n={self.n}")
        if self.output.inputs and self.output.inputs[-1] >= len(level):
            raise ValueError("output gate reads a nonexistent first-level gate")
        if circuit_fanin(self) > self.declared_k:
            raise ValueError(
                f"fan-in {circuit_fanin(self)} exceeds declared k={self.declared_k}"
            )

    def __eq__(self, other):
        if not isinstance(other, DepthTwoCircuit):
            return NotImplemented
        return (
            self.n == other.n
            and self.declared_k == other.declared_k
            and self.output == other.output
            and len(self.first_level) == len(other.first_level)
            and all(a == b for a, b in zip(self.first_level, other.first_level))
        )

    __hash__ = None


def circuit_eval(c: DepthTwoCircuit, x) -> int:
    bits = _bits(x)
    if len(bits) != c.n:
        raise ValueError(f"input has length {len(bits)}, circuit expects {c.n}")
    level = [gate_eval(g, bits) for g in c.first_level]
    return gate_eval(c.output, level)


def circuit_fanin(c: DepthTwoCircuit) -> int:
    level = getattr(c.first_level, "max_fan_in", None)
    if level is None:
        level = max((g.fan_in for g in c.first_level), default=0)
    return max(level, c.output.fan_in)
