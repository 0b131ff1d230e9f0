"""Depth-two majority circuits and adaptive majority-query algorithms."""

from .adaptive import (
    Block,
    EngineState,
    InconsistentOracle,
    SolveReport,
    StepLimitExceeded,
    adjustable_bound,
    block_partition,
    engine_advance,
    find_balanced_set,
    fixed_bound,
    solve_adjustable,
    solve_fixed,
)
from .core import (
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
from .oracles import (
    AdversaryOracle,
    HonestOracle,
    QueryRecord,
    QueryRejected,
    adversary_completions,
    adversary_is_ambiguous,
)
from .serialize import (
    CircuitFormatError,
    circuit_from_json,
    circuit_to_json,
    iter_circuit_json,
)
from .synth import (
    Verdict,
    VerificationRefused,
    boundary_edges,
    majority_table,
    synthesize,
    trivial_circuit,
    verify_exhaustive,
)

__version__ = "0.1.0"
