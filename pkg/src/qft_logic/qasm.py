"""OpenQASM 2.0 emission and a parser for the emitted subset.

Angles are written exactly as ``pi/2^m`` fractions (``pi``, ``pi/2``,
``-pi/4``) so the text pastes cleanly into a composer and diffs stably.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .circuit import Circuit, CircuitError, GateKind, GateOp, check
from . import circuit as ir

HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'


class QasmError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)
        self.line = line
        self.column = column


class QasmSyntaxError(QasmError):
    pass


class UnsupportedGateError(QasmError):
    pass


class QasmAngleError(QasmError):
    pass


@dataclass(frozen=True)
class QasmDocument:
    text: str
    gate_count: int
    declared_qubits: int
    declared_classical_bits: int

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.text)


def angle_text(k: int, adjoint: bool = False) -> str:
    """theta_k = 2*pi/2^k = pi/2^(k-1) as exact text."""
    denom = 2 ** (k - 1)
    body = "pi" if denom == 1 else f"pi/{denom}"
    return "-" + body if adjoint else body


def _statement(op: GateOp) -> str:
    q = "q[{}]".format
    kind = op.kind
    if kind is GateKind.HADAMARD:
        return f"h {q(op.targets[0])};"
    if kind is GateKind.PAULI_X:
        return f"x {q(op.targets[0])};"
    if kind is GateKind.PHASE:
        return f"u1({angle_text(op.k, op.adjoint)}) {q(op.targets[0])};"
    if kind is GateKind.CONTROLLED_PHASE:
        return (
            f"cu1({angle_text(op.k, op.adjoint)}) "
            f"{q(op.controls[0])},{q(op.targets[0])};"
        )
    if kind is GateKind.SWAP:
        return f"swap {q(op.targets[0])},{q(op.targets[1])};"
    return f"measure {q(op.targets[0])} -> c[{op.classical_bit}];"


def to_qasm(circuit: Circuit) -> QasmDocument:
    try:
        check(circuit)
    except CircuitError as exc:
        raise QasmError(f"cannot export invalid circuit: {exc}") from exc
    lines = [HEADER.rstrip("\n")]
    if circuit.label:
        lines.append("// " + " ".join(circuit.label.splitlines()))
    lines.append(f"qreg q[{circuit.num_qubits}];")
    lines.append(f"creg c[{circuit.num_classical_bits}];")
    lines.extend(_statement(op) for op in circuit.ops)
    return QasmDocument(
        text="\n".join(lines) + "\n",
        gate_count=circuit.gate_count(),
        declared_qubits=circuit.num_qubits,
        declared_classical_bits=circuit.num_classical_bits,
    )


_GATE_RE = re.compile(r"(?P<name>[A-Za-z_][A-Za-z0-9_]*)(?:\((?P<arg>[^()]*)\))?")
_QUBIT_RE = re.compile(r"q\[(\d+)\]")
_ANGLE_RE = re.compile(r"(-)?pi(?:/(\d+))?")
_REG_RE = re.compile(r"(qreg|creg) (q|c)\[(\d+)\];")
_MEASURE_RE = re.compile(r"measure q\[(\d+)\] -> c\[(\d+)\];")

_ARGS = {"h": 1, "x": 1, "u1": 1, "cu1": 2, "swap": 2}


def _parse_angle(text: str, lineno: int, col: int) -> tuple[int, bool]:
    m = _ANGLE_RE.fullmatch(text.strip())
    if not m:
        raise QasmAngleError(f"angle {text!r} is not of the form pi/2^m", lineno, col)
    denom = int(m.group(2) or 1)
    if denom < 1 or denom & (denom - 1):
        raise QasmAngleError(f"angle {text!r} is not of the form pi/2^m", lineno, col)
    return denom.bit_length(), bool(m.group(1))


def _parse_operands(text: str, count: int, lineno: int, col: int) -> list[int]:
    out = []
    pos = 0
    for i in range(count):
        m = _QUBIT_RE.match(text, pos)
        if not m:
            raise QasmSyntaxError("expected operand q[<index>]", lineno, col + pos)
        out.append(int(m.group(1)))
        pos = m.end()
        if i < count - 1:
            if text[pos : pos + 1] != ",":
                raise QasmSyntaxError("expected ','", lineno, col + pos)
            pos += 1
    if text[pos:] != ";":
        raise QasmSyntaxError("expected ';' after operands", lineno, col + pos)
    return out


def parse_qasm(text: str) -> Circuit:
    """Parse text in the subset :func:`to_qasm` emits back into a :class:`Circuit`."""
    label = ""
    nq = nc = None
    ops: list[GateOp] = []
    stage = 0  # 0: version, 1: include, 2: registers/body
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        col = raw.find(line) + 1 if line else 1
        if not line:
            continue
        if line.startswith("//"):
            if not label and not ops and nq is None:
                label = line[2:].strip()
            continue
        if stage == 0:
            if line != "OPENQASM 2.0;":
                raise QasmSyntaxError("expected 'OPENQASM 2.0;' header", lineno, col)
            stage = 1
            continue
        if stage == 1:
            if line != 'include "qelib1.inc";':
                raise QasmSyntaxError('expected include "qelib1.inc";', lineno, col)
            stage = 2
            continue
        if line.startswith(("qreg", "creg")):
            m = _REG_RE.fullmatch(line)
            if not m or (m.group(1) == "qreg") != (m.group(2) == "q"):
                raise QasmSyntaxError("malformed register declaration", lineno, col)
            size = int(m.group(3))
            if m.group(1) == "qreg":
                if nq is not None:
                    raise QasmSyntaxError("duplicate qreg", lineno, col)
                nq = size
            else:
                if nc is not None:
                    raise QasmSyntaxError("duplicate creg", lineno, col)
                nc = size
            continue
        if nq is None:
            raise QasmSyntaxError("gate before qreg declaration", lineno, col)
        if line.startswith("measure"):
            m = _MEASURE_RE.fullmatch(line)
            if not m:
                raise QasmSyntaxError("malformed measure statement", lineno, col)
            ops.append(ir.measure(int(m.group(1)), int(m.group(2))))
            continue

        m = _GATE_RE.match(line)
        if not m:
            raise QasmSyntaxError("expected a gate name", lineno, col)
        name, arg = m.group("name"), m.group("arg")
        if name not in _ARGS:
            raise UnsupportedGateError(f"unsupported gate {name!r}", lineno, col)
        rest = line[m.end() :]
        if not rest.startswith(" "):
            raise QasmSyntaxError("expected whitespace before operands", lineno, col + m.end())
        operand_col = col + m.end() + 1
        wires = _parse_operands(rest[1:], _ARGS[name], lineno, operand_col)
        wants_angle = name in ("u1", "cu1")
        if wants_angle != (arg is not None):
            what = "requires an angle" if wants_angle else "takes no angle"
            raise QasmSyntaxError(f"{name} {what}", lineno, col)
        try:
            if name == "h":
                ops.append(ir.h(wires[0]))
            elif name == "x":
                ops.append(ir.x(wires[0]))
            elif name == "swap":
                ops.append(ir.swap(*wires))
            else:
                k, adjoint = _parse_angle(arg, lineno, col + len(name) + 1)
                if name == "u1":
                    ops.append(ir.phase(k, wires[0], adjoint))
                else:
                    ops.append(ir.cphase(k, wires[0], wires[1], adjoint))
        except CircuitError as exc:
            raise QasmSyntaxError(str(exc), lineno, col) from exc

    if stage < 2 or nq is None or nc is None:
        raise QasmSyntaxError("missing header or register declarations")
    try:
        circuit = Circuit(nq, tuple(ops), nc, label=label)
        return check(circuit)
    except CircuitError as exc:
        raise QasmSyntaxError(str(exc)) from exc
