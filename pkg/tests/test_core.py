import pytest
from hypothesis import given, strategies as st

from majkit.core import (
    BitVector,
    DepthTwoCircuit,
    IndexOutOfRange,
    ThresholdGate,
    circuit_eval,
    circuit_fanin,
    gate_eval,
    index_set,
    maj_set,
    maj_threshold,
    majority,
)
from majkit.synth import synthesize, trivial_circuit

bv = BitVector.from_string


@pytest.mark.parametrize(
    "x, expected",
    [("0011", 1), ("00000", 0), ("00111", 1), ("", 1), ("0", 0), ("1", 1), ("01", 1)],
)
def test_majority(x, expected):
    assert majority(bv(x)) == expected


def test_maj_threshold_examples():
    assert maj_threshold(bv("0110"), {1, 2}, 1) == 1
    assert maj_threshold(bv("0110"), (), 0) == 1
    assert maj_threshold(bv("10010"), (0, 3, 4), 3) == 0


def test_maj_threshold_out_of_range():
    with pytest.raises(IndexOutOfRange):
        maj_threshold(bv("01"), (0, 2), 1)


def test_maj_set_ties_inclusive():
    assert maj_set(bv("1001"), (0, 1)) == 1
    assert maj_set(bv("1001"), (1, 2)) == 0
    assert maj_set(bv("1001"), ()) == 1


def test_index_set_normalizes_and_rejects():
    assert index_set([3, 1, 2]) == (1, 2, 3)
    with pytest.raises(ValueError):
        index_set([1, 1])
    with pytest.raises(IndexOutOfRange):
        index_set([0, 5], n=5)


def test_bitvector_int_roundtrip():
    x = BitVector.from_int(0b0110, 4)
    assert str(x) == "0110"
    assert x.to_int() == 6
    with pytest.raises(ValueError):
        BitVector((0, 2))


@pytest.mark.parametrize(
    "gate, values, expected",
    [
        (ThresholdGate((0, 2), (1, 1), 1), "101", 1),
        (ThresholdGate((), (), 0), "000", 1),
        (ThresholdGate((0,), (1,), 2), "1", 0),
        (ThresholdGate((0, 1), (3, 1), 3), "10", 1),
        (ThresholdGate((0, 1), (3, 1), 4), "10", 0),
        (ThresholdGate((), (), -1), "", 1),
    ],
)
def test_gate_eval(gate, values, expected):
    assert gate_eval(gate, bv(values)) == expected


def test_gate_validation():
    with pytest.raises(ValueError):
        ThresholdGate((0,), (0,), 1)
    with pytest.raises(ValueError):
        ThresholdGate((0, 1), (1,), 1)
    with pytest.raises(ValueError):
        ThresholdGate((1, 0), (1, 1), 1)
    assert ThresholdGate((0, 3), (2, 5), 1).fan_in == 7


def test_gate_eval_out_of_range():
    with pytest.raises(IndexOutOfRange):
        gate_eval(ThresholdGate((4,), (1,), 1), bv("101"))


def test_circuit_eval_on_synthesize_6():
    c = synthesize(6)
    # singletons x0, x1 give 2; sum over M = 1 fires only the t=1 gate
    assert circuit_eval(c, bv("111000")) == 1
    assert circuit_eval(c, bv("000000")) == 0
    assert circuit_eval(c, bv("111111")) == 1


def test_circuit_eval_length_mismatch():
    with pytest.raises(ValueError):
        circuit_eval(synthesize(6), bv("101"))


def test_circuit_fanin_examples():
    assert circuit_fanin(synthesize(6)) == 5
    assert circuit_fanin(synthesize(5)) == 7
    assert circuit_fanin(trivial_circuit(5)) == 5


def test_circuit_rejects_fanin_above_declared_k():
    g = ThresholdGate((0, 1, 2), (1, 1, 1), 2)
    with pytest.raises(ValueError):
        DepthTwoCircuit(3, (g,), ThresholdGate((0,), (1,), 1), declared_k=2)
    with pytest.raises(ValueError):
        DepthTwoCircuit(2, (g,), ThresholdGate((0,), (1,), 1), declared_k=3)
    with pytest.raises(ValueError):
        DepthTwoCircuit(3, (g,), ThresholdGate((1,), (1,), 1), declared_k=3)


bits = st.lists(st.integers(0, 1), min_size=1, max_size=24)


@given(bits)
def test_majority_matches_threshold_form(b):
    x = BitVector(tuple(b))
    n = len(b)
    assert majority(x) == maj_threshold(x, range(n), -(-n // 2))


@given(
    st.integers(1, 12).flatmap(
        lambda n: st.tuples(
            st.lists(st.integers(0, 1), min_size=n, max_size=n),
            st.lists(st.integers(0, 1), min_size=n, max_size=n),
            st.lists(st.integers(1, 3), min_size=n, max_size=n),
            st.integers(-2, 3 * n + 1),
        )
    )
)
def test_gate_monotone(args):
    lo, extra, weights, t = args
    hi = [a | b for a, b in zip(lo, extra)]
    g = ThresholdGate(tuple(range(len(lo))), tuple(weights), t)
    assert gate_eval(g, lo) <= gate_eval(g, hi)


@given(st.integers(1, 30).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, 2**n - 1), st.integers(0, 2**n - 1))
))
def test_circuit_monotone(args):
    n, a, b = args
    c = synthesize(n)
    x, y = BitVector.from_int(a & b, n), BitVector.from_int(a | b, n)
    assert circuit_eval(c, x) <= circuit_eval(c, y)


@pytest.mark.parametrize("n", range(1, 15))
def test_trivial_circuit_exhaustive(n):
    c = trivial_circuit(n)
    for v in range(1 << n):
        x = BitVector.from_int(v, n)
        assert circuit_eval(c, x) == majority(x)
