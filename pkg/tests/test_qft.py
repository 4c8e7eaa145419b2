import numpy as np
import pytest

from qft_logic import circuit as ir
from qft_logic.circuit import CircuitError, GateKind, concat, inverse, validate
from qft_logic.qft import build_iqft, build_qft
from qft_logic.simulator import circuit_matrix, run_state

from conftest import all_bits
from oracles import circuit_full_matrix, dft_matrix


def test_one_qubit_qft_is_hadamard():
    assert build_qft(1).ops == (ir.h(0),)
    assert build_iqft(1).ops == (ir.h(0),)


def test_two_qubit_structure():
    assert build_qft(2).ops == (ir.h(0), ir.cphase(2, control=1, target=0), ir.h(1), ir.swap(0, 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_qft_matrix_matches_dft(n):
    np.testing.assert_allclose(circuit_matrix(build_qft(n)), dft_matrix(n), atol=1e-9)


@pytest.mark.parametrize("n", range(1, 7))
def test_iqft_matrix_matches_inverse_dft(n):
    np.testing.assert_allclose(circuit_matrix(build_iqft(n)), dft_matrix(n, -1), atol=1e-9)


@pytest.mark.parametrize("n", range(1, 5))
def test_kron_oracle_agrees(n):
    np.testing.assert_allclose(circuit_full_matrix(build_qft(n)), dft_matrix(n), atol=1e-9)


def test_iqft3_is_conjugate_transpose():
    q = circuit_matrix(build_qft(3))
    np.testing.assert_allclose(circuit_matrix(build_iqft(3)), q.conj().T, atol=1e-10)


@pytest.mark.parametrize("n", range(1, 7))
def test_iqft_undoes_qft(n):
    prod = circuit_matrix(build_iqft(n)) @ circuit_matrix(build_qft(n))
    np.testing.assert_allclose(prod, np.eye(2**n), atol=1e-9)


def test_qft_then_iqft_identity_on_basis():
    c = concat(build_qft(2), build_iqft(2))
    for bits in all_bits(2):
        out = run_state(c, bits).amplitudes
        expected = np.zeros(4)
        expected[int(bits, 2)] = 1
        np.testing.assert_allclose(out, expected, atol=1e-12)


@pytest.mark.parametrize("n", range(1, 11))
def test_gate_counts(n):
    ops = build_qft(n).ops
    count = lambda kind: sum(op.kind is kind for op in ops)
    assert count(GateKind.HADAMARD) == n
    assert count(GateKind.CONTROLLED_PHASE) == n * (n - 1) // 2
    assert count(GateKind.SWAP) == n // 2
    assert validate(build_qft(n)) and validate(build_iqft(n))


def test_iqft_is_inverse_of_qft():
    assert build_iqft(4).ops == inverse(build_qft(4)).ops


def test_fourier_tagging():
    assert build_qft(3).fourier_balance == 1
    assert build_iqft(3).fourier_balance == -1


@pytest.mark.parametrize("n", [0, 11])
def test_width_range(n):
    with pytest.raises(CircuitError):
        build_qft(n)
    with pytest.raises(CircuitError):
        build_iqft(n)
