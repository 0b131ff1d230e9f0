"""Adaptive algorithms for MAJ_n with queries on at most k indices.

Two solvers:

* :func:`solve_adjustable` binary-searches the exact number of ones in each
  of ``ceil(n/k)`` blocks with threshold queries.
* :func:`solve_fixed` only sees plain majorities.  It keeps a partition of
  the still-active indices into blocks with known majority and repeatedly
  cuts away *balanced* sets (exactly half ones).  Dropping a balanced set
  never changes the majority of what is left, so once every block reports
  the same answer that answer is MAJ_n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence


class InconsistentOracle(RuntimeError):
    """Oracle answers contradict each other (no hidden vector fits them)."""


class StepLimitExceeded(RuntimeError):
    pass


def clog2(x: int) -> int:
    """``ceil(log2(x))`` for ``x >= 1``, in integers."""
    return (x - 1).bit_length()


def adjustable_bound(n: int, k: int) -> int:
    return -(-n // k) * clog2(k + 1)


def fixed_bound(n: int, k: int) -> float | None:
    """``2 (n/(k-4) + 1)(log2 k + 4)``; undefined below k = 5."""
    if k < 5:
        return None
    return 2 * (n / (k - 4) + 1) * (math.log2(k) + 4)


def block_partition(n: int, k: int) -> list[tuple[int, ...]]:
    """Split ``0..n-1`` into ``ceil(n/k)`` contiguous blocks of sizes l and l-1.

    The first ``n - r(l-1)`` blocks get the larger size ``l = ceil(n/r)``.
    """
    if k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    r = -(-n // k)
    size = -(-n // r)
    big = n - r * (size - 1)
    blocks, start = [], 0
    for j in range(r):
        width = size if j < big else size - 1
        blocks.append(tuple(range(start, start + width)))
        start += width
    return blocks


@dataclass
class SolveReport:
    answer: int
    queries: int
    bound: float | None
    trace: list[str] | None = None


def solve_adjustable(oracle, n: int, k: int, trace: bool = False) -> SolveReport:
    start = oracle.count
    steps = [] if trace else None
    total = 0
    for block in block_partition(n, k):
        # [sum >= lo] is 1 and [sum >= hi] is 0 without asking
        lo, hi = 0, len(block) + 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if oracle.query_adjustable(block, mid):
                lo = mid
            else:
                hi = mid
        total += lo
        if steps is not None:
            steps.append(f"block {block[0]}..{block[-1]}: sum {lo}")
    return SolveReport(
        answer=int(2 * total >= n),
        queries=oracle.count - start,
        bound=adjustable_bound(n, k),
        trace=steps,
    )


def find_balanced_set(
    oracle,
    A: Sequence[int],
    B: Sequence[int],
    fA: int,
    fB: int,
    prefer_large: bool = False,
) -> tuple[int, ...]:
    """Return a subset of ``A u B`` holding exactly half ones.

    ``A`` and ``B`` are disjoint, equally long (``c``), and have known,
    different majorities ``fA`` and ``fB``.  Sliding a width-``c`` window
    from ``A`` to ``B`` along the sequence ``A + B`` the answer must change
    somewhere; binary search finds a position ``h`` where window ``h``
    answers ``fA`` and window ``h + 1`` answers ``fB``.  The two windows
    differ in one element each, so those two elements differ, and the
    ``c - 1`` shared elements are (nearly) balanced:

    * even ``c``: the window containing the extra one is balanced (size c);
    * odd ``c``: the shared part is balanced (size c - 1), or with
      ``prefer_large`` the union of both windows (size c + 1).

    Uses at most ``ceil(log2(c + 1))`` queries and never asks the two known
    end windows.
    """
    c = len(A)
    if len(B) != c or c < 1:
        raise ValueError("A and B must be nonempty and of equal size")
    if set(A) & set(B):
        raise ValueError("A and B must be disjoint")
    if fA == fB:
        raise ValueError("A and B must have different majorities")
    seq = tuple(A) + tuple(B)

    def window(m):  # 1-based start, as i(m)..i(m+c-1)
        return seq[m - 1 : m - 1 + c]

    lo, hi = 1, c + 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if oracle.query_fixed(window(mid)) == fA:
            lo = mid
        else:
            hi = mid
    h, fh = lo, fA
    if c % 2 == 0:
        start = h + 1 - fh
        chosen = seq[start - 1 : start - 1 + c]
    elif prefer_large:
        chosen = seq[h - 1 : h + c]
    else:
        chosen = seq[h : h + c - 1]
    return tuple(sorted(chosen))


@dataclass
class Block:
    indices: tuple[int, ...]
    answer: int

    def __len__(self):
        return len(self.indices)

    @property
    def first(self) -> int:
        return self.indices[0]


@dataclass
class EngineState:
    n: int
    k: int
    blocks: list[Block]
    removed_balanced: int = 0
    steps: int = 0
    # indices whose bit value has been pinned down individually
    known: dict[int, int] = field(default_factory=dict)
    trace: list[str] | None = None

    @property
    def step_limit(self) -> int:
        return 16 * self.n * (clog2(self.k + 1) + 2)

    @property
    def active(self) -> tuple[int, ...]:
        return tuple(sorted(i for b in self.blocks for i in b.indices))

    def uniform(self) -> int | None:
        """The common block answer, 1 for no blocks, None if answers differ."""
        answers = {b.answer for b in self.blocks}
        if not answers:
            return 1
        if len(answers) == 1:
            return answers.pop()
        return None

    def note(self, msg: str):
        if self.trace is not None:
            self.trace.append(msg)

    # -- mutation helpers; every removal must be a balanced set
    def drop(self, *blocks: Block):
        for b in blocks:
            self.blocks.remove(b)

    def discard_balanced(self, count: int):
        self.removed_balanced += count

    def add(self, indices, answer: int) -> Block:
        b = Block(tuple(sorted(indices)), answer)
        if len(b) == 1:
            self.known[b.first] = answer
        self.blocks.append(b)
        return b


def init_state(oracle, n: int, k: int, trace: bool = False) -> EngineState:
    state = EngineState(n, k, [], trace=[] if trace else None)
    for part in block_partition(n, k):
        state.add(part, oracle.query_fixed(part))
    state.note(f"init {len(state.blocks)} blocks")
    return state


def _pair_key(p: Block, q: Block):
    return (max(len(p), len(q)), min(p.first, q.first))


def _best_pair(state: EngineState, accept):
    best = None
    blocks = state.blocks
    for a in range(len(blocks)):
        p = blocks[a]
        for b in range(a + 1, len(blocks)):
            q = blocks[b]
            if p.answer == q.answer or not accept(p, q):
                continue
            key = _pair_key(p, q)
            if best is None or key < best[0]:
                best = (key, p, q)
    return None if best is None else best[1:]


def _query_block(state: EngineState, oracle, indices) -> Block:
    indices = tuple(sorted(indices))
    return state.add(indices, oracle.query_fixed(indices))


def _split_off(state: EngineState, oracle, p: Block, y: int):
    """Query ``p`` without ``y``.

    On a changed answer the parity argument pins everything down and the
    balanced part is removed; returns True.  Otherwise returns the answer
    of ``p \\ {y}`` (equal to ``p.answer``) as False.

    If ``MAJ(p) = 0`` but ``MAJ(p - y) = 1`` then ``x_y = 0`` and
    ``(c-1)/2 <= sum < c/2``: ``c`` is odd and ``p - y`` is balanced.
    If ``MAJ(p) = 1`` but ``MAJ(p - y) = 0`` then ``x_y = 1`` and
    ``c/2 <= sum < (c+1)/2``: ``c`` is even and ``p`` itself is balanced.
    """
    c = len(p)
    rest = tuple(i for i in p.indices if i != y)
    if oracle.query_fixed(rest) == p.answer:
        return False
    if p.answer == 0:
        if c % 2 == 0:
            raise InconsistentOracle(f"flip on even block of size {c} with answer 0")
        state.drop(p)
        state.discard_balanced(c - 1)
        state.add((y,), 0)
        state.note(f"flip: drop {c - 1}, keep singleton {y}=0")
    else:
        if c % 2 == 1:
            raise InconsistentOracle(f"flip on odd block of size {c} with answer 1")
        state.drop(p)
        state.discard_balanced(c)
        state.note(f"flip: drop balanced block of {c}")
    state.known[y] = p.answer
    return True


def _cancel(state, oracle) -> bool:
    pair = _best_pair(state, lambda p, q: len(p) == 1 and len(q) == 1)
    if pair is None:
        return False
    state.drop(*pair)
    state.discard_balanced(2)
    state.note(f"cancel {pair[0].first},{pair[1].first}")
    return True


def _merge_balanced(state, oracle, p: Block, q: Block, balanced, label):
    state.drop(p, q)
    state.discard_balanced(len(balanced))
    rest = sorted(set(p.indices + q.indices) - set(balanced))
    if rest:
        _query_block(state, oracle, rest)
    state.note(f"{label}: drop {len(balanced)}, remainder {len(rest)}")


def _case2(state, oracle) -> bool:
    pair = _best_pair(state, lambda p, q: len(p) == len(q) >= 2)
    if pair is None:
        return False
    p, q = sorted(pair, key=lambda b: b.first)
    c = len(p)
    biggest = max(len(b) for b in state.blocks)
    # odd c leaves a remainder of c + 1 or c - 1; stay within current sizes
    large = c % 2 == 1 and (c + 1 > biggest or c + 1 > state.k)
    s = find_balanced_set(oracle, p.indices, q.indices, p.answer, q.answer, large)
    _merge_balanced(state, oracle, p, q, s, f"merge equal c={c}")
    return True


def _case1(state, oracle) -> bool:
    pair = _best_pair(
        state, lambda p, q: abs(len(p) - len(q)) == 1 and min(len(p), len(q)) >= 1
    )
    if pair is None:
        return False
    p, q = sorted(pair, key=len, reverse=True)
    y = p.indices[-1]
    if _split_off(state, oracle, p, y):
        return True
    m = p.indices[:-1]
    # odd |m|: take the c'+1 set so the remainder (which keeps y) has size c - 1
    large = len(m) % 2 == 1
    s = find_balanced_set(oracle, m, q.indices, p.answer, q.answer, large)
    _merge_balanced(state, oracle, p, q, s, f"merge uneven c={len(p)}")
    return True


def _absorb(state, oracle) -> bool:
    """Put a known singleton into a block of the opposite answer.

    With ``y`` of value ``v`` and ``Q`` (size c, sum s) answering ``1 - v``:

    * v = 1, MAJ(Q) = 0: ``2s < c``; ``Q + y`` answers 1 iff ``2s >= c - 1``,
      i.e. ``2s = c - 1`` and ``Q + y`` is balanced (c odd).
    * v = 0, MAJ(Q) = 1: ``2s >= c``; ``Q + y`` answers 0 iff ``2s < c + 1``,
      i.e. ``2s = c`` and ``Q`` alone is balanced (c even); y stays.

    Otherwise ``Q + y`` keeps the answer ``1 - v`` and becomes one block.
    """
    best = None
    for y in state.blocks:
        if len(y) != 1:
            continue
        for q in state.blocks:
            if q.answer == y.answer or not 2 <= len(q) < state.k:
                continue
            key = (len(q), q.first, y.first)
            if best is None or key < best[0]:
                best = (key, y, q)
    if best is None:
        return False
    _, y, q = best
    v, c = y.answer, len(q)
    merged = tuple(sorted(q.indices + y.indices))
    ans = oracle.query_fixed(merged)
    if ans == v:
        if v == 1:
            if c % 2 == 0:
                raise InconsistentOracle("absorb: balanced union needs odd block")
            state.drop(y, q)
            state.discard_balanced(c + 1)
            state.note(f"absorb drop {c}+1")
        else:
            if c % 2 == 1:
                raise InconsistentOracle("absorb: balanced block needs even size")
            state.drop(q)
            state.discard_balanced(c)
            state.note(f"absorb drop {c}, keep {y.first}")
    else:
        state.drop(y, q)
        state.blocks.append(Block(merged, ans))
        state.note(f"absorb merge into {c + 1}")
    return True


def _rebalance(state, oracle) -> bool:
    """Fallback: peel one not-yet-known index off the largest block."""
    candidates = [
        b for b in state.blocks if any(i not in state.known for i in b.indices)
    ]
    if not candidates:
        _settle_known(state)
        return True
    p = min(candidates, key=lambda b: (-len(b), b.first))
    y = max(i for i in p.indices if i not in state.known)
    if _split_off(state, oracle, p, y):
        return True
    state.drop(p)
    state.add(tuple(i for i in p.indices if i != y), p.answer)
    _query_block(state, oracle, (y,))
    state.note(f"rebalance peel {y} off block of {len(p)}")
    return True


def _settle_known(state: EngineState):
    # every active bit is known: cancel ones against zeros, keep the surplus
    bits = {i: state.known[i] for b in state.blocks for i in b.indices}
    ones = sorted(i for i, v in bits.items() if v)
    zeros = sorted(i for i, v in bits.items() if not v)
    pairs = min(len(ones), len(zeros))
    state.blocks.clear()
    state.discard_balanced(2 * pairs)
    for i in ones[pairs:] + zeros[pairs:]:
        state.add((i,), bits[i])
    state.note(f"settle: cancel {pairs} pairs")


_RULES: tuple[Callable[[EngineState, object], bool], ...] = (
    _cancel,
    _case2,
    _case1,
    _absorb,
    _rebalance,
)


def engine_advance(state: EngineState, oracle) -> EngineState:
    """Apply the first applicable elimination rule to ``state`` (in place)."""
    if not state.blocks or state.uniform() is not None:
        raise ValueError("engine_advance needs blocks with differing answers")
    state.steps += 1
    if state.steps > state.step_limit:
        raise StepLimitExceeded(f"more than {state.step_limit} engine steps")
    for rule in _RULES:
        if rule(state, oracle):
            return state
    raise AssertionError("no rule applies")  # _rebalance always applies


def solve_fixed(
    oracle,
    n: int,
    k: int,
    trace: bool = False,
    on_step: Callable[[EngineState], None] | None = None,
) -> SolveReport:
    start = oracle.count
    state = init_state(oracle, n, k, trace)
    if on_step is not None:
        on_step(state)
    while (answer := state.uniform()) is None:
        engine_advance(state, oracle)
        if on_step is not None:
            on_step(state)
    return SolveReport(
        answer=answer,
        queries=oracle.count - start,
        bound=fixed_bound(n, k),
        trace=state.trace,
    )
