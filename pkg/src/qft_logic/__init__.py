"""Boolean logic gates built from a QFT-based adder, with a dense simulator."""

from .adder import AdderLayout, accumulator_value, build_adder, build_adder_core
from .circuit import Circuit, CircuitBuilder, CircuitError, GateKind, GateOp, concat, inverse, validate
from .core import (
    StateVector,
    apply_gate,
    controlled_phase_matrix,
    hadamard_matrix,
    hadamard_tensor,
    phase_matrix,
)
from .logic import (
    LogicGateKind,
    SynthesizedGate,
    TruthTableReport,
    classical_oracle,
    resource_count,
    synthesize,
    verify_truth_table,
)
from .qasm import QasmDocument, parse_qasm, to_qasm
from .qft import build_iqft, build_qft
from .simulator import (
    MeasurementRecord,
    NonDeterministicOutcome,
    ShotHistogram,
    circuit_matrix,
    run_deterministic,
    run_shots,
    run_state,
)

__version__ = "0.1.0"
