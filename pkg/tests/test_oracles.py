import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from majkit.core import BitVector, majority
from majkit.oracles import (
    AdversaryOracle,
    HonestOracle,
    QueryRejected,
    adversary_completions,
    adversary_is_ambiguous,
    replay,
)

bv = BitVector.from_string


def test_honest_fixed():
    o = HonestOracle(bv("0110"), k=3)
    assert o.query_fixed({1, 2}) == 1
    assert o.count == 1
    assert o.stats.log[0].set == (1, 2)
    assert o.stats.log[0].threshold is None


@pytest.mark.parametrize("S", [(0, 1, 2, 3), (), (0, 4), (1, 1)])
def test_rejected_queries_are_not_counted(S):
    o = HonestOracle(bv("0110"), k=3)
    with pytest.raises(QueryRejected):
        o.query_fixed(S)
    with pytest.raises(QueryRejected):
        o.query_adjustable(S, 1)
    assert o.count == 0


def test_honest_adjustable():
    o = HonestOracle(bv("10010"), k=3)
    assert o.query_adjustable((0, 3, 4), 2) == 1
    assert o.query_adjustable((1,), 0) == 1
    assert o.query_adjustable((0, 3, 4), 3) == 0
    assert o.stats.log[0].threshold == 2


def test_keep_log_off_still_counts():
    o = HonestOracle(bv("0110"), k=4, keep_log=False)
    o.query_fixed((0, 1))
    o.query_adjustable((0, 1), 1)
    assert o.count == 2 and o.stats.log == []


def test_adversary_first_query_trace():
    a = AdversaryOracle(5, 2)
    assert a.query_fixed((0, 1)) == 1
    assert a.assigned == {0: 1, 1: 0}
    lo, hi = adversary_completions(a)
    assert (str(lo), str(hi)) == ("10000", "10111")


def test_adversary_adjustable():
    a = AdversaryOracle(4, 4)
    assert a.query_adjustable((0, 1, 2, 3), 3) == 0
    assert sum(a.assigned.values()) == 2


def test_adversary_fresh_completions():
    a = AdversaryOracle(3, 1)
    lo, hi = adversary_completions(a)
    assert (str(lo), str(hi)) == ("000", "111")
    assert adversary_is_ambiguous(a)


@pytest.mark.parametrize("n", range(1, 9))
def test_adversary_fully_touched_is_decided(n):
    a = AdversaryOracle(n, n)
    a.query_fixed(range(n))
    lo, hi = adversary_completions(a)
    assert lo == hi
    assert not adversary_is_ambiguous(a)
    assert majority(lo) == int(n % 2 == 0)


def test_adversary_two_disjoint_queries_ambiguous():
    a = AdversaryOracle(5, 2)
    a.query_fixed((0, 1))
    a.query_fixed((2, 3))
    assert sum(a.assigned.values()) == 2
    assert adversary_is_ambiguous(a)


def test_adversary_rejects_like_honest():
    a = AdversaryOracle(4, 2)
    with pytest.raises(QueryRejected):
        a.query_fixed((0, 1, 2))
    assert a.count == 0 and a.assigned == {}


queries = st.lists(
    st.tuples(st.sets(st.integers(0, 11), min_size=1, max_size=4), st.integers(-1, 5)),
    max_size=12,
)


@given(queries)
def test_honest_log_replays(qs):
    rng = random.Random(len(qs))
    x = BitVector(tuple(rng.randint(0, 1) for _ in range(12)))
    o = HonestOracle(x, k=4)
    for S, t in qs:
        o.query_fixed(S)
        o.query_adjustable(S, t)
    assert replay(o.stats.log, x)


@given(queries)
def test_adversary_balanced_and_consistent(qs):
    a = AdversaryOracle(12, 4)
    for S, t in qs:
        a.query_fixed(S)
        assert sum(a.assigned.values()) == len(a.assigned) // 2
        a.query_adjustable(S, t)
        assert sum(a.assigned.values()) == len(a.assigned) // 2
    lo, hi = adversary_completions(a)
    assert replay(a.stats.log, lo)
    assert replay(a.stats.log, hi)


def _all_sets(n, k):
    for size in range(1, k + 1):
        yield from itertools.combinations(range(n), size)


@pytest.mark.parametrize("n", range(1, 6))
def test_fewer_than_n_over_k_queries_stay_ambiguous_exhaustive(n):
    for k in range(1, n + 1):
        budget = -(-n // k) - 1
        sets = list(_all_sets(n, k))
        for seq in itertools.product(sets, repeat=budget):
            a = AdversaryOracle(n, k)
            for S in seq:
                a.query_fixed(S)
                assert adversary_is_ambiguous(a), (n, k, seq)
