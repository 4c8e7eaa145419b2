"""Command-line entry point: ``qft-logic <subcommand>``.

Exit codes: 0 success, 1 truth-table mismatch, 2 usage error, 3 I/O error.
Running with no subcommand verifies all five gates at N = 2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Optional, Sequence

from .adder import build_adder, build_adder_core, make_layout
from .circuit import Circuit, CircuitError
from .logic import (
    LogicGateKind,
    resource_count,
    synthesize,
    toffoli_baseline_qubits,
    verify_truth_table,
)
from .qasm import to_qasm
from .qft import build_iqft, build_qft
from .simulator import NonDeterministicOutcome, run_deterministic, run_shots, run_state

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
GATE_NAMES = [k.value for k in LogicGateKind]


class UsageError(Exception):
    pass


def _use_color(stream) -> bool:
    mode = os.environ.get("QFT_LOGIC_COLOR", "auto").lower()
    if mode == "always":
        return True
    if mode == "never":
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _paint(text: str, ok: bool, color: bool) -> str:
    if not color:
        return text
    return f"\033[{'32' if ok else '31'}m{text}\033[0m"


def _fmt(x: float) -> str:
    s = f"{x:.12f}"
    return "0.000000000000" if s == "-0.000000000000" else s


def _gate(args, name: Optional[str] = None):
    kind = LogicGateKind.parse(name or args.gate)
    try:
        return synthesize(kind, args.inputs, parity_decode=getattr(args, "parity_decode", False))
    except CircuitError as exc:
        raise UsageError(str(exc)) from exc


def _check_inputs(n: int) -> None:
    try:
        make_layout(n)
    except CircuitError as exc:
        raise UsageError(str(exc)) from exc


def _check_bits(bits: str, width: int) -> str:
    if len(bits) != width or set(bits) - {"0", "1"}:
        raise UsageError(f"--bits must be {width} characters of 0/1, got {bits!r}")
    return bits


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def cmd_truth_table(args, out) -> int:
    _check_inputs(args.inputs)
    names = GATE_NAMES if args.gate == "all" else [args.gate]
    reports = [verify_truth_table(_gate(args, name)) for name in names]
    passed = all(r.passed for r in reports)

    if args.format == "json":
        if args.gate == "all":
            _emit_json({"gates": [r.to_dict() for r in reports], "pass": passed}, out)
        else:
            _emit_json(reports[0].to_dict(), out)
    else:
        color = _use_color(out)
        header = "".join(f"q{i}" for i in range(args.inputs))
        for report in reports:
            status = "pass" if report.passed else "FAIL"
            out.write(f"# {report.gate.value}({report.n}): {len(report.rows)} rows, "
                      f"{_paint(status, report.passed, color)}\n")
            out.write(f"{header}\tc\texpected\tmatch\n")
            for r in report.rows:
                measured = "?" if r.measured is None else str(r.measured)
                flag = _paint("ok" if r.match else "MISMATCH", r.match, color)
                out.write(f"{r.input}\t{measured}\t{r.expected}\t{flag}\n")
    if args.figure:
        from .plotting import truth_table_figure

        truth_table_figure(reports, args.figure)
    return EXIT_OK if passed else EXIT_MISMATCH


def cmd_simulate(args, out) -> int:
    gate = _gate(args)
    bits = _check_bits(args.bits, args.inputs)
    full = gate.layout.initial_bits(bits)
    label = gate.circuit.label
    if args.shots is not None:
        if args.seed is None:
            raise UsageError("--shots requires an explicit --seed")
        if args.shots < 1:
            raise UsageError("--shots must be >= 1")
        hist = run_shots(gate.circuit, full, args.shots, args.seed)
        if args.format == "json":
            _emit_json({"gate": gate.kind.value, "n": args.inputs, "input": bits,
                        "shots": hist.shots, "seed": hist.seed, "counts": hist.counts}, out)
        else:
            out.write(f"# {label} input={bits} shots={hist.shots} seed={hist.seed}\n")
            out.write("c\tcount\n")
            for key, count in hist.counts.items():
                out.write(f"{key}\t{count}\n")
        if args.figure:
            from .plotting import histogram_figure

            histogram_figure(hist.counts, args.figure, f"{label} input {bits}")
        return EXIT_OK

    record = run_deterministic(gate.circuit, full)
    value = gate.decode(record)
    if args.format == "json":
        _emit_json({"gate": gate.kind.value, "n": args.inputs, "input": bits,
                    "classical_bits": record.bitstring, "output": value,
                    "confidence": round(record.confidence, 12)}, out)
    else:
        out.write(f"# {label} input={bits}\n")
        out.write(f"register\t{record.bitstring}\noutput\t{value}\n"
                  f"confidence\t{_fmt(record.confidence)}\n")
    if args.figure:
        from .plotting import histogram_figure

        histogram_figure({record.bitstring: 1}, args.figure, f"{label} input {bits}")
    return EXIT_OK


def _state_target(args) -> tuple[Circuit, Callable[[str], str], int]:
    """(circuit, data bits -> full-register bits, expected data width)."""
    try:
        if args.circuit == "qft":
            return build_qft(args.inputs), str, args.inputs
        if args.circuit == "iqft":
            return build_iqft(args.inputs), str, args.inputs
        if args.circuit == "adder":
            circuit, layout = build_adder(args.inputs)
            return circuit, layout.initial_bits, args.inputs
    except CircuitError as exc:
        raise UsageError(str(exc)) from exc
    if not args.gate:
        raise UsageError("--gate is required unless --circuit is qft, iqft or adder")
    gate = _gate(args)
    return gate.circuit, gate.layout.initial_bits, args.inputs


def cmd_state(args, out) -> int:
    circuit, expand, width = _state_target(args)
    bits = _check_bits(args.bits, width)
    state = run_state(circuit, expand(bits))
    n = state.num_qubits
    probs = state.probabilities()
    rows = [
        {"index": i, "bits": format(i, f"0{n}b"), "re": float(a.real),
         "im": float(a.imag), "probability": float(p)}
        for i, (a, p) in enumerate(zip(state.amplitudes, probs))
    ]
    if args.format == "json":
        for r in rows:
            for key in ("re", "im", "probability"):
                r[key] = float(_fmt(r[key]))
        _emit_json({"circuit": circuit.label, "num_qubits": n, "input": bits,
                    "amplitudes": rows}, out)
    else:
        out.write(f"# {circuit.label} input={bits} ({n} qubits, qubit 0 first)\n")
        out.write("index\tbits\tre\tim\tprobability\n")
        for r in rows:
            out.write(f"{r['index']}\t{r['bits']}\t{_fmt(r['re'])}\t{_fmt(r['im'])}\t"
                      f"{_fmt(r['probability'])}\n")
    if args.figure:
        from .plotting import state_figure

        state_figure(probs, n, args.figure, f"{circuit.label} input {bits}")
    return EXIT_OK


def cmd_export_qasm(args, out) -> int:
    circuit, _, _ = _state_target(args)
    doc = to_qasm(circuit)
    if args.output is None:
        out.write(doc.text)
        return EXIT_OK
    try:
        doc.write(args.output)
    except OSError as exc:
        sys.stderr.write(f"error: cannot write {args.output}: {exc}\n")
        return EXIT_IO
    out.write(f"wrote {args.output}: qubits {doc.declared_qubits}, gates {doc.gate_count}, "
              f"classical bits {doc.declared_classical_bits}\n")
    return EXIT_OK


def cmd_resources(args, out) -> int:
    _check_inputs(args.inputs)
    try:
        qubits, gates = resource_count(args.gate, args.inputs, args.parity_decode)
    except CircuitError as exc:
        raise UsageError(str(exc)) from exc
    baseline = toffoli_baseline_qubits(args.inputs)
    layout = make_layout(args.inputs)
    core, _ = build_adder_core(args.inputs)
    info = {"gate": args.gate, "n": args.inputs, "qubits": qubits, "gates": gates,
            "adder_gates": core.gate_count(), "ancillas": layout.ancilla_count,
            "toffoli_baseline_qubits": baseline}
    if args.format == "json":
        _emit_json(info, out)
    else:
        out.write(f"# {args.gate}({args.inputs})\n")
        for key in ("qubits", "gates", "adder_gates", "ancillas", "toffoli_baseline_qubits"):
            out.write(f"{key}\t{info[key]}\n")
        out.write(f"qubits {qubits} vs baseline {baseline}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qft-logic",
        description="Boolean logic gates from a QFT adder, simulated and verified.",
    )
    sub = parser.add_subparsers(dest="command")

    def common(p, gate_required=True, gate_all=False, fmt=True, figure=True):
        choices = GATE_NAMES + (["all"] if gate_all else [])
        p.add_argument("--gate", choices=choices, required=gate_required and not gate_all,
                       default="all" if gate_all else None, type=str.lower)
        p.add_argument("--inputs", type=int, default=2, help="number of input bits N (2..8)")
        p.add_argument("--parity-decode", action="store_true",
                       help="xor: read the adder's sum bit directly (allows N > 2)")
        if fmt:
            p.add_argument("--format", choices=["text", "json"], default="text")
        if figure:
            p.add_argument("--figure", metavar="PATH", help="also write a PNG figure")

    p = sub.add_parser("truth-table", help="verify a gate on all 2^N basis inputs")
    common(p, gate_all=True)
    p.set_defaults(func=cmd_truth_table)

    p = sub.add_parser("simulate", help="run a gate on one input")
    common(p)
    p.add_argument("--bits", required=True, help="input bits q0q1...")
    p.add_argument("--shots", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_simulate)

    circuits = ["gate", "qft", "iqft", "adder"]
    p = sub.add_parser("state", help="dump the final state vector before measurement")
    common(p, gate_required=False)
    p.add_argument("--circuit", choices=circuits, default="gate")
    p.add_argument("--bits", required=True)
    p.set_defaults(func=cmd_state)

    p = sub.add_parser("export-qasm", help="write OpenQASM 2.0 for a circuit")
    common(p, gate_required=False, fmt=False, figure=False)
    p.add_argument("--circuit", choices=circuits, default="gate")
    p.add_argument("--output", "-o", metavar="PATH", help="file to write (stdout if omitted)")
    p.set_defaults(func=cmd_export_qasm)

    p = sub.add_parser("resources", help="qubit and gate counts vs the Toffoli baseline")
    common(p, figure=False)
    p.set_defaults(func=cmd_resources)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    if not argv or argv[0].startswith("-") and argv[0] not in ("-h", "--help"):
        argv = ["truth-table"] + argv
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"qft-logic: error: {exc}\n")
        return EXIT_USAGE
    except NonDeterministicOutcome as exc:
        sys.stderr.write(f"qft-logic: {exc}\n")
        return EXIT_MISMATCH
    except OSError as exc:
        sys.stderr.write(f"qft-logic: I/O error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
