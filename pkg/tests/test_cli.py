import io
import json
import subprocess
import sys

import pytest

from qft_logic.cli import main
from qft_logic.logic import resource_count


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture(autouse=True)
def no_color(monkeypatch):
    monkeypatch.setenv("QFT_LOGIC_COLOR", "never")


def test_truth_table_and():
    code, text = run("truth-table", "--gate", "and", "--inputs", "2")
    assert code == 0
    rows = [line.split("\t") for line in text.splitlines()[2:]]
    assert rows == [["00", "0", "0", "ok"], ["01", "0", "0", "ok"],
                    ["10", "0", "0", "ok"], ["11", "1", "1", "ok"]]


def test_truth_table_xor_json():
    code, text = run("truth-table", "--gate", "xor", "--inputs", "2", "--format", "json")
    assert code == 0
    doc = json.loads(text)
    assert set(doc) == {"gate", "n", "rows", "pass"}
    assert doc["gate"] == "xor" and doc["n"] == 2 and doc["pass"] is True
    assert [r["measured"] for r in doc["rows"]] == [0, 1, 1, 0]
    assert set(doc["rows"][0]) == {"input", "measured", "expected", "match"}


def test_truth_table_xor_wide_is_usage_error(capsys):
    code, _ = run("truth-table", "--gate", "xor", "--inputs", "3")
    assert code == 2
    assert "N = 2" in capsys.readouterr().err
    code, _ = run("truth-table", "--gate", "xor", "--inputs", "3", "--parity-decode")
    assert code == 0


def test_default_action_verifies_all_gates():
    code, text = run()
    assert code == 0
    assert text.count(": 4 rows, pass") == 5
    code, text = run("--format", "json")
    assert json.loads(text)["pass"] is True


def test_color_always(monkeypatch):
    monkeypatch.setenv("QFT_LOGIC_COLOR", "always")
    _, text = run("truth-table", "--gate", "and")
    assert "\033[32m" in text


@pytest.mark.parametrize("argv", [
    ["truth-table", "--gate", "and", "--inputs", "9"],
    ["truth-table", "--gate", "bogus"],
    ["simulate", "--gate", "and", "--bits", "0"],
    ["simulate", "--gate", "and", "--bits", "01", "--shots", "10"],
    ["state", "--gate", "or", "--inputs", "2", "--bits", "0"],
    ["state", "--bits", "00"],
    ["resources", "--gate", "nand", "--inputs", "1"],
])
def test_usage_errors(argv, capsys):
    code, _ = run(*argv)
    assert code == 2


def test_state_or_gate_single_branch():
    code, text = run("state", "--gate", "or", "--inputs", "2", "--bits", "01")
    assert code == 0
    probs = [float(line.split("\t")[4]) for line in text.splitlines()[2:]]
    assert len(probs) == 8
    assert max(probs) == pytest.approx(1.0, abs=1e-10)
    assert sum(p > 1e-10 for p in probs) == 1


def test_state_qft_uniform():
    code, text = run("state", "--circuit", "qft", "--inputs", "2", "--bits", "00", "--format", "json")
    assert code == 0
    amps = json.loads(text)["amplitudes"]
    assert [a["re"] for a in amps] == [0.5] * 4
    assert [a["im"] for a in amps] == [0.0] * 4


def test_simulate_deterministic_and_shots():
    code, text = run("simulate", "--gate", "and", "--bits", "11", "--format", "json")
    assert code == 0
    doc = json.loads(text)
    assert doc["output"] == 1 and doc["confidence"] >= 1 - 1e-6
    code, text = run("simulate", "--gate", "xor", "--bits", "01", "--shots", "1024",
                     "--seed", "5", "--format", "json")
    assert json.loads(text)["counts"] == {"1": 1024}


def test_export_nand_matches_golden(tmp_path, fixtures_dir):
    path = tmp_path / "nand.qasm"
    code, text = run("export-qasm", "--gate", "nand", "--inputs", "2", "--output", str(path))
    assert code == 0
    assert path.read_bytes() == (fixtures_dir / "nand_2.qasm").read_bytes()
    assert "qubits 3" in text and "gates 11" in text


def test_export_and_declares_three_qubits():
    _, text = run("export-qasm", "--gate", "and", "--inputs", "2")
    assert "qreg q[3];" in text.splitlines()


def test_export_nor4_width():
    _, text = run("export-qasm", "--gate", "nor", "--inputs", "4")
    qubits, _ = resource_count("nor", 4)
    assert f"qreg q[{qubits}];" in text and qubits == 6


def test_export_io_error(tmp_path):
    target = tmp_path / "missing-dir" / "x.qasm"
    code, _ = run("export-qasm", "--gate", "and", "--output", str(target))
    assert code == 3


@pytest.mark.parametrize("n, qubits, baseline", [(2, 3, 3), (4, 6, 7), (8, 11, 15)])
def test_resources(n, qubits, baseline):
    code, text = run("resources", "--gate", "nand", "--inputs", str(n))
    assert code == 0
    assert f"qubits {qubits} vs baseline {baseline}" in text
    _, js = run("resources", "--gate", "nand", "--inputs", str(n), "--format", "json")
    doc = json.loads(js)
    assert doc["qubits"] == qubits and doc["toffoli_baseline_qubits"] == baseline


@pytest.mark.parametrize("argv", [
    ["truth-table"],
    ["truth-table", "--gate", "or", "--inputs", "5", "--format", "json"],
    ["state", "--gate", "xor", "--bits", "10"],
    ["export-qasm", "--gate", "nor", "--inputs", "3"],
    ["simulate", "--gate", "or", "--bits", "10", "--shots", "300", "--seed", "9"],
])
def test_repeat_runs_are_identical(argv):
    assert run(*argv) == run(*argv)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qft_logic", "resources", "--gate", "and"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "qubits 3 vs baseline 3" in proc.stdout
