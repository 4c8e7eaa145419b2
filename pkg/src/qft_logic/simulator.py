"""Dense state-vector execution of :class:`~qft_logic.circuit.Circuit` values."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .circuit import Circuit, CircuitError, GateKind, GateOp, validate
from .core import (
    StateVector,
    apply_gate,
    hadamard_matrix,
    pauli_x_matrix,
    phase_matrix,
    swap_matrix,
)

DETERMINISTIC_THRESHOLD = 1 - 1e-6


class NonDeterministicOutcome(RuntimeError):
    """The measured marginal does not concentrate on a single outcome."""

    def __init__(self, message: str, distribution: dict[str, float]):
        super().__init__(message)
        self.distribution = distribution


@dataclass(frozen=True)
class MeasurementRecord:
    classical_bits: tuple[int, ...]
    confidence: float

    @property
    def bitstring(self) -> str:
        """Classical register rendered highest bit first (c[n-1] ... c[0])."""
        return "".join(str(b) for b in reversed(self.classical_bits))


@dataclass(frozen=True)
class ShotHistogram:
    counts: dict[str, int]
    shots: int
    seed: int

    def __post_init__(self):
        if sum(self.counts.values()) != self.shots:
            raise ValueError("histogram counts do not sum to the shot count")


def op_matrix(op: GateOp) -> np.ndarray:
    kind = op.kind
    if kind is GateKind.HADAMARD:
        return hadamard_matrix()
    if kind is GateKind.PAULI_X:
        return pauli_x_matrix()
    if kind is GateKind.PHASE:
        return phase_matrix(op.k, op.adjoint)
    if kind is GateKind.CONTROLLED_PHASE:
        # Applied as a controlled 1-qubit phase on the target wire.
        return phase_matrix(op.k, op.adjoint)
    if kind is GateKind.SWAP:
        return swap_matrix()
    raise CircuitError(f"{kind.value} has no matrix")


def _coerce_bits(bits: str | Sequence[int], width: int) -> list[int]:
    if isinstance(bits, str) and any(ch not in "01" for ch in bits):
        raise ValueError(f"input bits must be a 0/1 string, got {bits!r}")
    out = [int(b) for b in bits]
    if len(out) != width or any(b not in (0, 1) for b in out):
        raise ValueError(f"expected {width} input bits, got {bits!r}")
    return out


def evolve(circuit: Circuit, state: StateVector) -> StateVector:
    """Apply every unitary op of ``circuit`` to ``state``; measurements are skipped."""
    if state.num_qubits != circuit.num_qubits:
        raise ValueError(
            f"state has {state.num_qubits} qubits, circuit has {circuit.num_qubits}"
        )
    for op in circuit.ops:
        if op.kind is GateKind.MEASURE:
            continue
        state = apply_gate(state, op_matrix(op), op.targets, op.controls)
    return state


def run_state(circuit: Circuit, input_bits: str | Sequence[int]) -> StateVector:
    """Final pre-measurement state for the basis input ``input_bits`` (qubit 0 first)."""
    result = validate(circuit)
    if not result:
        raise CircuitError(result.message)
    bits = _coerce_bits(input_bits, circuit.num_qubits)
    return evolve(circuit, StateVector.basis(bits))


def circuit_matrix(circuit: Circuit) -> np.ndarray:
    """Dense unitary of the measurement-free part, column a = image of |a>."""
    n = circuit.num_qubits
    dim = 2**n
    cols = []
    for a in range(dim):
        bits = format(a, f"0{n}b")
        cols.append(evolve(circuit, StateVector.basis(bits)).amplitudes)
    return np.stack(cols, axis=1) if dim else np.zeros((0, 0))


def measured_distribution(circuit: Circuit, state: StateVector) -> dict[tuple[int, ...], float]:
    """Marginal over the measured wires, keyed by the full classical register.

    Unmeasured qubits are summed out; classical bits no measure writes stay 0.
    """
    meas = circuit.measurements()
    if not meas:
        raise CircuitError("circuit has no measurements")
    n = circuit.num_qubits
    probs = state.probabilities().reshape((2,) * n)
    measured_wires = [op.targets[0] for op in meas]
    drop = tuple(q for q in range(n) if q not in measured_wires)
    marginal = probs.sum(axis=drop) if drop else probs
    # marginal axes follow increasing wire order
    order = sorted(measured_wires)
    out: dict[tuple[int, ...], float] = {}
    for idx in np.ndindex(marginal.shape):
        p = float(marginal[idx])
        if p <= 0.0:
            continue
        wire_value = dict(zip(order, idx))
        bits = [0] * circuit.num_classical_bits
        for op in meas:
            bits[op.classical_bit] = wire_value[op.targets[0]]
        key = tuple(bits)
        out[key] = out.get(key, 0.0) + p
    return out


def run_deterministic(circuit: Circuit, input_bits: str | Sequence[int]) -> MeasurementRecord:
    state = run_state(circuit, input_bits)
    dist = measured_distribution(circuit, state)
    bits, p = max(dist.items(), key=lambda kv: kv[1])
    if p < DETERMINISTIC_THRESHOLD:
        rendered = {
            "".join(map(str, reversed(k))): v for k, v in sorted(dist.items())
        }
        raise NonDeterministicOutcome(
            f"outcome of {circuit.label or 'circuit'} on {input_bits!r} is not "
            f"deterministic (max probability {p:.6g})",
            rendered,
        )
    return MeasurementRecord(bits, p)


def run_shots(
    circuit: Circuit, input_bits: str | Sequence[int], shots: int, seed: int
) -> ShotHistogram:
    """Sample ``shots`` outcomes by inverse CDF with ``numpy.random.default_rng(seed)``."""
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    state = run_state(circuit, input_bits)
    dist = measured_distribution(circuit, state)
    outcomes = sorted(dist)
    weights = np.array([dist[o] for o in outcomes])
    cdf = np.cumsum(weights)
    cdf /= cdf[-1]
    rng = np.random.default_rng(seed)
    draws = np.searchsorted(cdf, rng.random(shots), side="right")
    draws = np.minimum(draws, len(outcomes) - 1)
    tally = np.bincount(draws, minlength=len(outcomes))
    counts = {
        "".join(map(str, reversed(o))): int(c)
        for o, c in zip(outcomes, tally)
        if c
    }
    return ShotHistogram(dict(sorted(counts.items())), shots, seed)
