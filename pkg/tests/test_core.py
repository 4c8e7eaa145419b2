import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qft_logic.core import (
    QuantumCoreError,
    StateVector,
    apply_gate,
    controlled_phase_matrix,
    equal_up_to_global_phase,
    hadamard_matrix,
    hadamard_tensor,
    is_unitary,
    pauli_x_matrix,
    phase_matrix,
    swap_matrix,
)

from oracles import H, controlled_phase_by_sum, embed, kron_all

S = 1 / math.sqrt(2)


def test_hadamard_matrix_entries():
    np.testing.assert_allclose(hadamard_matrix(), [[S, S], [S, -S]], atol=1e-15)


def test_hadamard_involution_on_zero():
    psi = StateVector.basis("0")
    twice = apply_gate(apply_gate(psi, hadamard_matrix(), [0]), hadamard_matrix(), [0])
    np.testing.assert_allclose(twice.amplitudes, [1, 0], atol=1e-15)


def test_hadamard_on_zero_is_plus():
    out = apply_gate(StateVector.basis("0"), hadamard_matrix(), [0])
    np.testing.assert_allclose(out.amplitudes, [S, S], atol=1e-15)


@pytest.mark.parametrize(
    "k, expected",
    [
        (1, -1),
        (2, 1j),
        # e^{2 pi i / 8} evaluated numerically
        (3, 0.7071067811865476 + 0.7071067811865475j),
    ],
)
def test_phase_matrix(k, expected):
    np.testing.assert_allclose(phase_matrix(k), np.diag([1, expected]), atol=1e-15)


@pytest.mark.parametrize("bad", [0, -1, 1.5])
def test_phase_rejects_bad_index(bad):
    with pytest.raises(QuantumCoreError):
        phase_matrix(bad)
    with pytest.raises(QuantumCoreError):
        controlled_phase_matrix(bad)


def test_controlled_phase_k1_negates_11():
    out = apply_gate(StateVector.basis("11"), phase_matrix(1), [1], [0])
    np.testing.assert_allclose(out.amplitudes, [0, 0, 0, -1], atol=1e-15)


@pytest.mark.parametrize("k", [1, 2, 3, 7])
@pytest.mark.parametrize("bits", ["00", "01", "10"])
def test_controlled_phase_leaves_other_basis_states(k, bits):
    psi = StateVector.basis(bits)
    out = apply_gate(psi, phase_matrix(k), [1], [0])
    np.testing.assert_allclose(out.amplitudes, psi.amplitudes, atol=1e-15)


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_controlled_phase_matches_projector_sum(k):
    np.testing.assert_allclose(controlled_phase_matrix(k), controlled_phase_by_sum(k), atol=1e-15)


def test_adjoint_matrices_are_conjugate():
    for k in range(1, 8):
        np.testing.assert_allclose(phase_matrix(k, adjoint=True), phase_matrix(k).conj())
        np.testing.assert_allclose(
            controlled_phase_matrix(k, adjoint=True), controlled_phase_matrix(k).conj()
        )


def test_apply_h_to_first_qubit():
    out = apply_gate(StateVector.basis("00"), hadamard_matrix(), [0])
    np.testing.assert_allclose(out.amplitudes, [S, 0, S, 0], atol=1e-15)


def test_apply_x_to_second_qubit():
    out = apply_gate(StateVector.basis("10"), pauli_x_matrix(), [1])
    np.testing.assert_allclose(out.amplitudes, [0, 0, 0, 1])


def test_apply_cp_on_bell():
    bell = StateVector(2, np.array([S, 0, 0, S]))
    out = apply_gate(bell, phase_matrix(1), [1], [0])
    expected = controlled_phase_by_sum(1) @ bell.amplitudes
    np.testing.assert_allclose(out.amplitudes, expected, atol=1e-15)
    np.testing.assert_allclose(out.amplitudes, [S, 0, 0, -S], atol=1e-15)


def test_apply_swap_two_target_gate():
    out = apply_gate(StateVector.basis("100"), swap_matrix(), [0, 2])
    np.testing.assert_allclose(out.amplitudes, StateVector.basis("001").amplitudes)


@pytest.mark.parametrize(
    "targets, controls, gate",
    [
        ([2], [], hadamard_matrix()),
        ([0], [0], phase_matrix(1)),
        ([0], [], swap_matrix()),
        ([], [], np.eye(1)),
    ],
)
def test_apply_gate_errors(targets, controls, gate):
    with pytest.raises(QuantumCoreError):
        apply_gate(StateVector.basis("00"), gate, targets, controls)


def test_state_vector_invariants():
    with pytest.raises(QuantumCoreError):
        StateVector(2, np.ones(4))
    with pytest.raises(QuantumCoreError):
        StateVector(2, np.ones(3) / math.sqrt(3))
    with pytest.raises(QuantumCoreError):
        StateVector(1, np.array([np.nan, 1.0]))
    psi = StateVector.basis("01")
    assert len(psi) == 4
    with pytest.raises(ValueError):
        psi.amplitudes[0] = 1.0


def test_hadamard_tensor_small():
    np.testing.assert_allclose(hadamard_tensor(1), hadamard_matrix(), atol=1e-15)
    expected = 0.5 * np.array(
        [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]]
    )
    np.testing.assert_allclose(hadamard_tensor(2), expected, atol=1e-15)


@pytest.mark.parametrize("n", range(1, 7))
def test_hadamard_tensor_is_kron_power(n):
    np.testing.assert_allclose(hadamard_tensor(n), kron_all([H] * n), atol=1e-12)


def test_hadamard_tensor_sign_is_and_parity():
    m = hadamard_tensor(3) * math.sqrt(8)
    for x in range(8):
        for y in range(8):
            assert m[x, y] == pytest.approx((-1) ** bin(x & y).count("1"))


@pytest.mark.parametrize("n", [0, 11])
def test_hadamard_tensor_rejects_size(n):
    with pytest.raises(QuantumCoreError):
        hadamard_tensor(n)


def test_library_matrices_are_unitary():
    mats = [hadamard_matrix(), pauli_x_matrix(), swap_matrix()]
    mats += [phase_matrix(k) for k in range(1, 17)]
    mats += [controlled_phase_matrix(k) for k in range(1, 17)]
    mats += [hadamard_tensor(n) for n in range(1, 7)]
    assert all(is_unitary(m) for m in mats)
    assert not is_unitary(np.ones((2, 2)))


def random_state(n, seed):
    rng = np.random.default_rng(seed)
    v = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return StateVector(n, v / np.linalg.norm(v))


def random_unitary_1q(seed):
    rng = np.random.default_rng(seed)
    q, _ = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    return q


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.data(), st.integers(0, 2**32 - 1))
def test_single_qubit_embedding_matches_kron(n, data, seed):
    q = data.draw(st.integers(0, n - 1))
    psi = random_state(n, seed)
    u = random_unitary_1q(seed + 1)
    out = apply_gate(psi, u, [q])
    np.testing.assert_allclose(out.amplitudes, embed(n, {q: u}) @ psi.amplitudes, atol=1e-12)
    assert abs(out.norm() - 1) <= 1e-12


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.data(), st.integers(0, 2**32 - 1))
def test_controlled_embedding_matches_kron(n, data, seed):
    c, t = data.draw(st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True))
    psi = random_state(n, seed)
    u = random_unitary_1q(seed + 7)
    p0 = np.diag([1, 0])
    p1 = np.diag([0, 1])
    full = embed(n, {c: p0}) + embed(n, {c: p1, t: u})
    out = apply_gate(psi, u, [t], [c])
    np.testing.assert_allclose(out.amplitudes, full @ psi.amplitudes, atol=1e-12)
    assert abs(out.norm() - 1) <= 1e-12


def test_global_phase_comparison():
    a = np.array([S, 1j * S])
    assert equal_up_to_global_phase(a, a * np.exp(0.7j))
    assert not equal_up_to_global_phase(a, np.array([S, -1j * S]))
