"""Query endpoints for the adaptive model.

Both oracles accept fixed-threshold queries (``MAJ_S(x)``) and
adjustable-threshold queries (``[sum_S(x) >= t]``) on sets of size 1..k.
Rejected queries raise :class:`QueryRejected` and are not counted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .core import BitVector, IndexOutOfRange, index_set, majority


class QueryRejected(ValueError):
    pass


@dataclass(frozen=True)
class QueryRecord:
    set: tuple[int, ...]
    threshold: int | None
    answer: int


@dataclass
class OracleStats:
    count: int = 0
    log: list[QueryRecord] = field(default_factory=list)
    keep_log: bool = True

    def record(self, S, t, answer):
        self.count += 1
        if self.keep_log:
            self.log.append(QueryRecord(S, t, answer))


class _Oracle:
    n: int
    k: int

    def __init__(self, n: int, k: int, keep_log: bool = True):
        if k < 1:
            raise ValueError("oracle fan-in k must be >= 1")
        self.n = n
        self.k = k
        self.stats = OracleStats(keep_log=keep_log)

    @property
    def count(self) -> int:
        return self.stats.count

    def _check(self, S: Iterable[int]) -> tuple[int, ...]:
        try:
            S = index_set(S, self.n)
        except (ValueError, IndexOutOfRange) as exc:
            raise QueryRejected(str(exc)) from None
        if not 1 <= len(S) <= self.k:
            raise QueryRejected(f"query size {len(S)} outside 1..{self.k}")
        return S

    def _sum(self, S: tuple[int, ...]) -> int:
        raise NotImplementedError

    def query_fixed(self, S: Iterable[int]) -> int:
        S = self._check(S)
        answer = int(2 * self._sum(S) >= len(S))
        self.stats.record(S, None, answer)
        return answer

    def query_adjustable(self, S: Iterable[int], t: int) -> int:
        S = self._check(S)
        answer = int(self._sum(S) >= t)
        self.stats.record(S, int(t), answer)
        return answer


class HonestOracle(_Oracle):
    """Answers truthfully from a hidden vector."""

    def __init__(self, x, k: int, keep_log: bool = True):
        x = x if isinstance(x, BitVector) else BitVector(tuple(x))
        super().__init__(x.n, k, keep_log)
        self.x = x
        self._bits = x.bits

    def _sum(self, S):
        bits = self._bits
        return sum(bits[i] for i in S)


class AdversaryOracle(_Oracle):
    """Fixes bits lazily so that every touched set stays as balanced as possible.

    Before answering a query on ``T`` the still-unset indices of ``T`` are
    assigned: with ``S`` the previously touched indices, the
    ``z = floor(|T u S| / 2) - sum_S`` lowest of them become 1, the rest 0.
    Hence ``sum(assigned) == len(assigned) // 2`` after every query.
    """

    def __init__(self, n: int, k: int, keep_log: bool = True):
        super().__init__(n, k, keep_log)
        self.assigned: dict[int, int] = {}
        self._ones = 0

    @property
    def touched(self) -> tuple[int, ...]:
        return tuple(sorted(self.assigned))

    def _fill(self, T):
        fresh = [i for i in T if i not in self.assigned]
        z = (len(self.assigned) + len(fresh)) // 2 - self._ones
        assert 0 <= z <= len(fresh), (z, len(fresh))
        for j, i in enumerate(fresh):
            self.assigned[i] = int(j < z)
        self._ones += z
        assert self._ones == len(self.assigned) // 2

    def _sum(self, S):
        self._fill(S)
        return sum(self.assigned[i] for i in S)


def adversary_completions(a: AdversaryOracle) -> tuple[BitVector, BitVector]:
    """The assignment extended with all free bits 0, and with all free bits 1."""
    lo = tuple(a.assigned.get(i, 0) for i in range(a.n))
    hi = tuple(a.assigned.get(i, 1) for i in range(a.n))
    return BitVector(lo), BitVector(hi)


def adversary_is_ambiguous(a: AdversaryOracle) -> bool:
    lo, hi = adversary_completions(a)
    return majority(lo) != majority(hi)


def replay(log: Iterable[QueryRecord], x) -> bool:
    """Check that every logged answer is what ``x`` would have produced."""
    bits = x.bits if isinstance(x, BitVector) else tuple(x)
    for rec in log:
        s = sum(bits[i] for i in rec.set)
        expect = 2 * s >= len(rec.set) if rec.threshold is None else s >= rec.threshold
        if int(expect) != rec.answer:
            return False
    return True
