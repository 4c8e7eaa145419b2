"""Circuit intermediate representation.

A :class:`Circuit` is an immutable ordered list of :class:`GateOp` values
plus register sizes. Rotation angles are stored as an integer index ``k``
(theta_k = 2*pi/2**k) and an ``adjoint`` flag, never as float radians.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence


class CircuitError(ValueError):
    pass


class GateKind(enum.Enum):
    HADAMARD = "h"
    PAULI_X = "x"
    PHASE = "p"
    CONTROLLED_PHASE = "cp"
    SWAP = "swap"
    MEASURE = "measure"


# (targets, controls) arity per kind
_ARITY = {
    GateKind.HADAMARD: (1, 0),
    GateKind.PAULI_X: (1, 0),
    GateKind.PHASE: (1, 0),
    GateKind.CONTROLLED_PHASE: (1, 1),
    GateKind.SWAP: (2, 0),
    GateKind.MEASURE: (1, 0),
}

_SELF_INVERSE = {GateKind.HADAMARD, GateKind.PAULI_X, GateKind.SWAP}


@dataclass(frozen=True)
class GateOp:
    kind: GateKind
    targets: tuple[int, ...]
    controls: tuple[int, ...] = ()
    k: Optional[int] = None
    adjoint: bool = False
    classical_bit: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(int(t) for t in self.targets))
        object.__setattr__(self, "controls", tuple(int(c) for c in self.controls))
        n_t, n_c = _ARITY[self.kind]
        if len(self.targets) != n_t or len(self.controls) != n_c:
            raise CircuitError(
                f"{self.kind.value} takes {n_t} target(s) and {n_c} control(s), "
                f"got {self.targets} / {self.controls}"
            )
        wires = self.targets + self.controls
        if len(set(wires)) != len(wires):
            raise CircuitError(f"{self.kind.value} acts on repeated wires {wires}")
        if self.kind in (GateKind.PHASE, GateKind.CONTROLLED_PHASE):
            if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
                raise CircuitError(f"phase index k must be an integer >= 1, got {self.k!r}")
        elif self.k is not None or self.adjoint:
            raise CircuitError(f"{self.kind.value} carries no angle")
        if (self.kind is GateKind.MEASURE) != (self.classical_bit is not None):
            raise CircuitError("exactly the measure op carries a classical bit")

    @property
    def qubits(self) -> tuple[int, ...]:
        return self.targets + self.controls

    def inverse(self) -> "GateOp":
        if self.kind is GateKind.MEASURE:
            raise CircuitError("measurement is not invertible")
        if self.kind in _SELF_INVERSE:
            return self
        return replace(self, adjoint=not self.adjoint)

    def __str__(self) -> str:
        name = self.kind.value
        if self.k is not None:
            name += f"({'-' if self.adjoint else ''}k={self.k})"
        if self.kind is GateKind.MEASURE:
            return f"measure q{self.targets[0]} -> c{self.classical_bit}"
        ctl = f" ctl {','.join(map(str, self.controls))}" if self.controls else ""
        return f"{name} {','.join(map(str, self.targets))}{ctl}"


def h(q: int) -> GateOp:
    return GateOp(GateKind.HADAMARD, (q,))


def x(q: int) -> GateOp:
    return GateOp(GateKind.PAULI_X, (q,))


def phase(k: int, q: int, adjoint: bool = False) -> GateOp:
    return GateOp(GateKind.PHASE, (q,), k=k, adjoint=adjoint)


def cphase(k: int, control: int, target: int, adjoint: bool = False) -> GateOp:
    return GateOp(GateKind.CONTROLLED_PHASE, (target,), (control,), k=k, adjoint=adjoint)


def swap(a: int, b: int) -> GateOp:
    return GateOp(GateKind.SWAP, (a, b))


def measure(q: int, c: int) -> GateOp:
    return GateOp(GateKind.MEASURE, (q,), classical_bit=c)


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list over ``num_qubits`` wires and ``num_classical_bits`` bits.

    ``fourier_balance`` counts open Fourier-basis sections: a QFT adds one,
    an IQFT removes one. Measuring while the balance is positive is a
    structural error caught by :func:`validate`.
    """

    num_qubits: int
    ops: tuple[GateOp, ...] = ()
    num_classical_bits: int = 0
    label: str = ""
    fourier_balance: int = 0

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))
        if self.num_qubits < 1:
            raise CircuitError("a circuit needs at least one qubit")
        if self.num_classical_bits < 0:
            raise CircuitError("negative classical register size")

    def __len__(self) -> int:
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    @property
    def has_measurements(self) -> bool:
        return any(op.kind is GateKind.MEASURE for op in self.ops)

    def gate_count(self) -> int:
        """Number of unitary ops, i.e. everything except measurements."""
        return sum(op.kind is not GateKind.MEASURE for op in self.ops)

    def unitary_part(self) -> "Circuit":
        return replace(
            self, ops=tuple(op for op in self.ops if op.kind is not GateKind.MEASURE)
        )

    def measurements(self) -> list[GateOp]:
        return [op for op in self.ops if op.kind is GateKind.MEASURE]

    def relabel(self, label: str) -> "Circuit":
        return replace(self, label=label)


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    message: str = ""
    op_index: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


def validate(circuit: Circuit) -> ValidationResult:
    """Return the first structural violation in ``circuit``, or success."""
    measured: set[int] = set()
    written: set[int] = set()
    for i, op in enumerate(circuit.ops):
        for q in op.qubits:
            if not 0 <= q < circuit.num_qubits:
                return ValidationResult(False, f"index out of range at op {i}", i)
            if q in measured:
                return ValidationResult(False, f"gate after measurement at op {i}", i)
        if op.kind is GateKind.MEASURE:
            c = op.classical_bit
            if not 0 <= c < circuit.num_classical_bits:
                return ValidationResult(False, f"classical bit out of range at op {i}", i)
            if c in written:
                return ValidationResult(False, f"classical bit written twice at op {i}", i)
            if circuit.fourier_balance > 0:
                return ValidationResult(
                    False, f"measurement while in Fourier basis at op {i}", i
                )
            written.add(c)
            measured.add(op.targets[0])
    return ValidationResult(True)


def check(circuit: Circuit) -> Circuit:
    """Raise :class:`CircuitError` unless ``circuit`` validates."""
    result = validate(circuit)
    if not result:
        raise CircuitError(result.message)
    return circuit


def inverse(circuit: Circuit) -> Circuit:
    if circuit.has_measurements:
        raise CircuitError("a circuit containing measurements is not invertible")
    label = circuit.label
    if label.endswith("_dg"):
        label = label[: -len("_dg")]
    elif label:
        label += "_dg"
    return replace(
        circuit,
        ops=tuple(op.inverse() for op in reversed(circuit.ops)),
        label=label,
        fourier_balance=-circuit.fourier_balance,
    )


def concat(a: Circuit, b: Circuit, label: Optional[str] = None) -> Circuit:
    if a.num_qubits != b.num_qubits:
        raise CircuitError(f"width mismatch: {a.num_qubits} vs {b.num_qubits} qubits")
    if a.has_measurements:
        raise CircuitError("cannot append gates after a measured circuit")
    if label is None:
        label = "+".join(s for s in (a.label, b.label) if s)
    return Circuit(
        num_qubits=a.num_qubits,
        ops=a.ops + b.ops,
        num_classical_bits=max(a.num_classical_bits, b.num_classical_bits),
        label=label,
        fourier_balance=a.fourier_balance + b.fourier_balance,
    )


def remap(circuit: Circuit, wires: Sequence[int], num_qubits: int) -> Circuit:
    """Embed ``circuit`` into a wider register, sending its qubit i to ``wires[i]``."""
    wires = list(wires)
    if len(wires) != circuit.num_qubits or len(set(wires)) != len(wires):
        raise CircuitError(f"need {circuit.num_qubits} distinct wires, got {wires}")

    def move(op: GateOp) -> GateOp:
        return replace(
            op,
            targets=tuple(wires[t] for t in op.targets),
            controls=tuple(wires[c] for c in op.controls),
        )

    return Circuit(
        num_qubits=num_qubits,
        ops=tuple(move(op) for op in circuit.ops),
        num_classical_bits=circuit.num_classical_bits,
        label=circuit.label,
        fourier_balance=circuit.fourier_balance,
    )


@dataclass
class CircuitBuilder:
    """Mutable accumulator that freezes into a :class:`Circuit`."""

    num_qubits: int
    num_classical_bits: int = 0
    label: str = ""
    ops: list[GateOp] = field(default_factory=list)

    def add(self, *ops: GateOp) -> "CircuitBuilder":
        self.ops.extend(ops)
        return self

    def extend(self, ops: Iterable[GateOp]) -> "CircuitBuilder":
        self.ops.extend(ops)
        return self

    def h(self, q):
        return self.add(h(q))

    def x(self, q):
        return self.add(x(q))

    def phase(self, k, q, adjoint=False):
        return self.add(phase(k, q, adjoint))

    def cphase(self, k, control, target, adjoint=False):
        return self.add(cphase(k, control, target, adjoint))

    def swap(self, a, b):
        return self.add(swap(a, b))

    def measure(self, q, c):
        self.num_classical_bits = max(self.num_classical_bits, c + 1)
        return self.add(measure(q, c))

    def build(self, fourier_balance: int = 0) -> Circuit:
        return Circuit(
            num_qubits=self.num_qubits,
            ops=tuple(self.ops),
            num_classical_bits=self.num_classical_bits,
            label=self.label,
            fourier_balance=fourier_balance,
        )
