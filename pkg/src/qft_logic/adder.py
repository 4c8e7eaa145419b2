"""One-bit, N-input adder built from a QFT, a phase ladder and an IQFT.

The accumulator register is the ancillas (most significant first) followed
by input q0 as the least significant bit, so for two inputs the register is
``|A q0>`` and the wire layout is ``A, q0, q1``. Every further input q_i is
added into the Fourier-space accumulator by controlled phases, then the
IQFT brings the sum back to the computational basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .circuit import Circuit, CircuitBuilder, CircuitError, concat, remap
from .qft import build_iqft, build_qft
from .simulator import MeasurementRecord

MIN_INPUTS = 2
MAX_INPUTS = 8


def accumulator_width(num_inputs: int) -> int:
    """ceil(log2(N + 1)): bits needed to hold any sum 0..N."""
    return int(num_inputs).bit_length()


@dataclass(frozen=True)
class AdderLayout:
    num_inputs: int
    input_qubits: tuple[int, ...]
    accumulator_qubits: tuple[int, ...]
    ancilla_count: int
    sum_bit: int
    carry_bits: tuple[int, ...]

    @property
    def num_qubits(self) -> int:
        return self.num_inputs + self.ancilla_count

    @property
    def width(self) -> int:
        return len(self.accumulator_qubits)

    @property
    def ancilla_qubits(self) -> tuple[int, ...]:
        return self.accumulator_qubits[: self.ancilla_count]

    @property
    def top_qubit(self) -> int:
        """Most significant accumulator wire (the ``A`` wire for two inputs)."""
        return self.accumulator_qubits[0]

    def qubit_of_weight(self, w: int) -> int:
        return self.accumulator_qubits[self.width - 1 - w]

    def initial_bits(self, inputs: str | Sequence[int]) -> str:
        """Full-register basis label: ancillas at |0>, then the inputs q0..q_{N-1}."""
        if isinstance(inputs, str):
            if any(ch not in "01" for ch in inputs):
                raise ValueError(f"input bits must be a 0/1 string, got {inputs!r}")
            bits = inputs
        else:
            bits = "".join(str(int(b)) for b in inputs)
        if len(bits) != self.num_inputs or set(bits) - {"0", "1"}:
            raise ValueError(f"expected {self.num_inputs} input bits, got {inputs!r}")
        return "0" * self.ancilla_count + bits


def make_layout(num_inputs: int) -> AdderLayout:
    if not isinstance(num_inputs, int) or not MIN_INPUTS <= num_inputs <= MAX_INPUTS:
        raise CircuitError(
            f"adder supports {MIN_INPUTS}..{MAX_INPUTS} inputs, got {num_inputs!r}"
        )
    width = accumulator_width(num_inputs)
    ancillas = width - 1
    inputs = tuple(range(ancillas, ancillas + num_inputs))
    return AdderLayout(
        num_inputs=num_inputs,
        input_qubits=inputs,
        accumulator_qubits=tuple(range(ancillas)) + (inputs[0],),
        ancilla_count=ancillas,
        sum_bit=0,
        carry_bits=tuple(range(1, width)),
    )


def build_adder_core(num_inputs: int) -> tuple[Circuit, AdderLayout]:
    """The measurement-free adder: QFT, addition ladder, IQFT."""
    layout = make_layout(num_inputs)
    n = layout.num_qubits
    acc = layout.accumulator_qubits
    width = layout.width

    ladder = CircuitBuilder(n, label="add")
    for q in layout.input_qubits[1:]:
        # Adding 1 turns the accumulator wire j (from the top) by 2*pi/2^(j+1).
        for j, target in enumerate(acc):
            ladder.cphase(j + 1, control=q, target=target)

    core = concat(
        concat(remap(build_qft(width), acc, n), ladder.build()),
        remap(build_iqft(width), acc, n),
        label=f"adder({num_inputs})",
    )
    return core, layout


def measure_accumulator(circuit: Circuit, layout: AdderLayout) -> Circuit:
    b = CircuitBuilder(circuit.num_qubits, label=circuit.label)
    for w in range(layout.width):
        b.measure(layout.qubit_of_weight(w), w)
    return concat(circuit, b.build(), label=circuit.label)


def build_adder(num_inputs: int) -> tuple[Circuit, AdderLayout]:
    """Adder with the sum bit measured into c0 and carries into c1, c2, ..."""
    core, layout = build_adder_core(num_inputs)
    return measure_accumulator(core, layout), layout


def accumulator_value(record: MeasurementRecord, layout: AdderLayout) -> int:
    bits = record.classical_bits
    if len(bits) != layout.width:
        raise ValueError(
            f"record has {len(bits)} classical bits, layout expects {layout.width}"
        )
    return sum(b << w for w, b in enumerate(bits))
