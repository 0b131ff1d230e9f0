"""JSON form of depth-two circuits.

    {"n": N, "k": K,
     "gates": [{"inputs": [...], "weights": [...], "threshold": t}, ...],
     "output": {"inputs": [...], "weights": [...], "threshold": t}}

Indices are 0-based.  ``k`` is the declared fan-in bound.
"""

from __future__ import annotations

import json

from .core import DepthTwoCircuit, ThresholdGate


class CircuitFormatError(ValueError):
    pass


def _gate_dict(g: ThresholdGate) -> dict:
    return {"inputs": list(g.inputs), "weights": list(g.weights), "threshold": g.threshold}


def iter_circuit_json(c: DepthTwoCircuit):
    """Yield the JSON text in chunks, one first-level gate per line.

    Memory stays proportional to a single gate, which matters for large n.
    """
    yield f'{{"n": {c.n}, "k": {c.declared_k}, "gates": ['
    for j, g in enumerate(c.first_level):
        yield ("\n  " if j == 0 else ",\n  ") + json.dumps(_gate_dict(g))
    yield '\n],\n"output": ' + json.dumps(_gate_dict(c.output)) + "}"


def circuit_to_json(c: DepthTwoCircuit, indent: int | None = None) -> str:
    if indent is None:
        return "".join(iter_circuit_json(c))
    doc = {
        "n": c.n,
        "k": c.declared_k,
        "gates": [_gate_dict(g) for g in c.first_level],
        "output": _gate_dict(c.output),
    }
    return json.dumps(doc, indent=indent)


def _int(value, where: str, minimum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise CircuitFormatError(f"{where}: expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise CircuitFormatError(f"{where}: must be >= {minimum}, got {value}")
    return value


def _gate(doc, where: str) -> ThresholdGate:
    if not isinstance(doc, dict):
        raise CircuitFormatError(f"{where}: expected an object")
    for key in ("inputs", "weights", "threshold"):
        if key not in doc:
            raise CircuitFormatError(f"{where}.{key}: missing")
    for key in ("inputs", "weights"):
        if not isinstance(doc[key], list):
            raise CircuitFormatError(f"{where}.{key}: expected a list")
    inputs = [_int(v, f"{where}.inputs[{j}]", 0) for j, v in enumerate(doc["inputs"])]
    weights = [_int(v, f"{where}.weights[{j}]", 1) for j, v in enumerate(doc["weights"])]
    threshold = _int(doc["threshold"], f"{where}.threshold")
    if len(inputs) != len(weights):
        raise CircuitFormatError(f"{where}.weights: length differs from inputs")
    if any(a >= b for a, b in zip(inputs, inputs[1:])):
        raise CircuitFormatError(f"{where}.inputs: must be strictly increasing")
    return ThresholdGate(tuple(inputs), tuple(weights), threshold)


def circuit_from_json(text: str) -> DepthTwoCircuit:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CircuitFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise CircuitFormatError("document: expected an object")
    for key in ("n", "k", "gates", "output"):
        if key not in doc:
            raise CircuitFormatError(f"{key}: missing")
    n = _int(doc["n"], "n", 1)
    k = _int(doc["k"], "k", 0)
    if not isinstance(doc["gates"], list):
        raise CircuitFormatError("gates: expected a list")
    gates = [_gate(g, f"gates[{j}]") for j, g in enumerate(doc["gates"])]
    output = _gate(doc["output"], "output")
    for j, g in enumerate(gates):
        if g.inputs and g.inputs[-1] >= n:
            raise CircuitFormatError(f"gates[{j}].inputs: index {g.inputs[-1]} >= n={n}")
    if output.inputs and output.inputs[-1] >= len(gates):
        raise CircuitFormatError(
            f"output.inputs: gate index {output.inputs[-1]} >= {len(gates)} gates"
        )
    try:
        return DepthTwoCircuit(n, tuple(gates), output, k)
    except ValueError as exc:
        raise CircuitFormatError(f"k: {exc}") from None
