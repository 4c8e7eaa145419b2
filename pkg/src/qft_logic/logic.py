"""Boolean gates synthesized from the QFT adder.

Every gate is ``pre + adder + post + measurement``, with the adder circuit
left untouched:

* AND  -- bare adder, read the top accumulator wire (the carry).
* NAND -- AND followed by X on the top wire.
* NOR  -- X on every input, then the adder (De Morgan: ~a & ~b = ~(a | b)).
* OR   -- NOR followed by X on the top wire.
* XOR  -- adder, then SWAP(top, q0) so the sum bit lands on the top wire.

For two inputs (or any power-of-two N) the top wire alone carries the
answer. Other widths measure the whole accumulator and decode classically.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import circuit as ir
from .adder import AdderLayout, MAX_INPUTS, build_adder_core, make_layout
from .circuit import Circuit, CircuitBuilder, CircuitError, concat
from .simulator import MeasurementRecord, NonDeterministicOutcome, run_deterministic


class LogicGateKind(enum.Enum):
    AND = "and"
    NAND = "nand"
    OR = "or"
    NOR = "nor"
    XOR = "xor"

    @classmethod
    def parse(cls, name: "str | LogicGateKind") -> "LogicGateKind":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            raise ValueError(
                f"unknown gate {name!r}; choose from {', '.join(k.value for k in cls)}"
            ) from None


class Readout(enum.Enum):
    ANCILLA = "ancilla"  # top accumulator wire -> c0
    ACCUMULATOR = "accumulator"  # all accumulator wires, decoded classically
    SUM_BIT = "sum-bit"  # q0 measured directly -> c0 (parity)


_NEGATED_INPUTS = {LogicGateKind.OR, LogicGateKind.NOR}
_FLIPPED_TOP = {LogicGateKind.NAND, LogicGateKind.OR}


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


@dataclass(frozen=True)
class SynthesizedGate:
    """A logic gate circuit and how to read its answer.

    ``output_bit`` is the classical bit holding the result for the single-wire
    readouts; it is ``None`` when the whole accumulator is decoded.
    """

    kind: LogicGateKind
    num_inputs: int
    circuit: Circuit
    output_bit: Optional[int]
    layout: AdderLayout
    readout: Readout = field(default=Readout.ANCILLA)

    def decode(self, record: MeasurementRecord) -> int:
        if self.readout is not Readout.ACCUMULATOR:
            return record.classical_bits[self.output_bit]
        width = self.layout.width
        value = sum(b << w for w, b in enumerate(record.classical_bits[:width]))
        if self.kind in _FLIPPED_TOP:
            value ^= 1 << (width - 1)
        n = self.num_inputs
        # With negated inputs the accumulator holds N - popcount.
        all_set = value == n
        if self.kind in (LogicGateKind.AND, LogicGateKind.NOR):
            return int(all_set)
        if self.kind in (LogicGateKind.NAND, LogicGateKind.OR):
            return int(not all_set)
        raise CircuitError(f"{self.kind.value} has no accumulator decode")

    def evaluate(self, bits: str | Sequence[int]) -> int:
        record = run_deterministic(self.circuit, self.layout.initial_bits(bits))
        return self.decode(record)

    def prefix(self) -> Circuit:
        """The measurement-free part of the circuit."""
        return self.circuit.unitary_part()


def synthesize(
    kind: "LogicGateKind | str", num_inputs: int = 2, parity_decode: bool = False
) -> SynthesizedGate:
    """Build the QFT-adder circuit computing ``kind`` over ``num_inputs`` bits.

    XOR is defined through the two-input half adder; for wider inputs pass
    ``parity_decode=True`` to read the adder's sum bit (input parity) directly.
    ``parity_decode`` at N = 2 gives the same answer without the SWAP.
    """
    kind = LogicGateKind.parse(kind)
    if parity_decode and kind is not LogicGateKind.XOR:
        raise CircuitError("parity decode only applies to xor")
    if kind is LogicGateKind.XOR and num_inputs != 2 and not parity_decode:
        raise CircuitError(
            "xor is defined for N = 2 only (SWAP onto the ancilla of the half adder); "
            "use parity decode for wider inputs"
        )
    core, layout = build_adder_core(num_inputs)
    n = layout.num_qubits
    top = layout.top_qubit
    label = f"{kind.value}({num_inputs})" + ("-parity" if parity_decode else "")

    pre = CircuitBuilder(n, label="pre")
    if kind in _NEGATED_INPUTS:
        for q in layout.input_qubits:
            pre.x(q)
    post = CircuitBuilder(n, label="post")
    if kind in _FLIPPED_TOP:
        post.x(top)
    if kind is LogicGateKind.XOR and not parity_decode:
        post.swap(top, layout.input_qubits[0])

    meas = CircuitBuilder(n, label="readout")
    if kind is LogicGateKind.XOR:
        readout = Readout.SUM_BIT if parity_decode else Readout.ANCILLA
        meas.measure(layout.input_qubits[0] if parity_decode else top, 0)
        output_bit: Optional[int] = 0
    elif _is_power_of_two(num_inputs):
        # Only the value N sets the top accumulator bit.
        readout = Readout.ANCILLA
        meas.measure(top, 0)
        output_bit = 0
    else:
        readout = Readout.ACCUMULATOR
        for w in range(layout.width):
            meas.measure(layout.qubit_of_weight(w), w)
        output_bit = None

    body = concat(concat(pre.build(), core), post.build())
    full = ir.check(concat(body, meas.build(), label=label))
    return SynthesizedGate(kind, num_inputs, full, output_bit, layout, readout)


def classical_oracle(kind: "LogicGateKind | str", bits: Sequence[int] | str) -> int:
    kind = LogicGateKind.parse(kind)
    bits = [int(b) for b in bits]
    if kind is LogicGateKind.AND:
        return int(all(bits))
    if kind is LogicGateKind.NAND:
        return int(not all(bits))
    if kind is LogicGateKind.OR:
        return int(any(bits))
    if kind is LogicGateKind.NOR:
        return int(not any(bits))
    return sum(bits) % 2


@dataclass(frozen=True)
class TruthTableRow:
    input: str
    measured: Optional[int]
    expected: int
    confidence: float
    error: str = ""

    @property
    def match(self) -> bool:
        return self.measured is not None and self.measured == self.expected

    def to_dict(self) -> dict:
        return {
            "input": self.input,
            "measured": self.measured,
            "expected": self.expected,
            "match": self.match,
        }


@dataclass(frozen=True)
class TruthTableReport:
    gate: LogicGateKind
    n: int
    rows: tuple[TruthTableRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.match for r in self.rows)

    @property
    def min_confidence(self) -> float:
        return min((r.confidence for r in self.rows), default=0.0)

    def to_dict(self) -> dict:
        return {
            "gate": self.gate.value,
            "n": self.n,
            "rows": [r.to_dict() for r in self.rows],
            "pass": self.passed,
        }


def verify_truth_table(gate: SynthesizedGate) -> TruthTableReport:
    """Run every basis input and compare against :func:`classical_oracle`."""
    n = gate.num_inputs
    if n > MAX_INPUTS:
        raise ValueError(f"truth tables are limited to {MAX_INPUTS} inputs")
    rows = []
    for index in range(2**n):
        bits = format(index, f"0{n}b")
        expected = classical_oracle(gate.kind, bits)
        try:
            record = run_deterministic(gate.circuit, gate.layout.initial_bits(bits))
        except NonDeterministicOutcome as exc:
            rows.append(TruthTableRow(bits, None, expected, 0.0, str(exc)))
            continue
        rows.append(TruthTableRow(bits, gate.decode(record), expected, record.confidence))
    return TruthTableReport(gate.kind, n, tuple(rows))


def toffoli_baseline_qubits(num_inputs: int) -> int:
    """Qubits for the Toffoli-chain construction of an N-input gate: 2N - 1."""
    return 2 * num_inputs - 1


def resource_count(
    kind: "LogicGateKind | str", num_inputs: int, parity_decode: bool = False
) -> tuple[int, int]:
    """(qubits, gates) of the synthesized circuit; measurements are not counted as gates."""
    make_layout(num_inputs)
    gate = synthesize(kind, num_inputs, parity_decode=parity_decode)
    return gate.layout.num_qubits, gate.circuit.gate_count()
