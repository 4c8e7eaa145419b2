"""Complex state vectors, the gate-matrix library and gate application.

Basis indexing is big-endian: qubit 0 is the most significant bit of the
basis index, so the two-qubit label ``|q0 q1> = |10>`` is index 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import pi, sqrt
from typing import Sequence

import numpy as np

NORM_TOL = 1e-10
UNITARY_TOL = 1e-10
MAX_DENSE_QUBITS = 10

_SQRT2_INV = 1 / sqrt(2)


class QuantumCoreError(ValueError):
    """Raised on malformed gate parameters or wire assignments."""


@dataclass(frozen=True, eq=False)
class StateVector:
    """An n-qubit pure state held as 2**n complex128 amplitudes.

    The amplitude array is made read-only on construction; every operation
    in this package returns a fresh state instead of mutating one.
    """

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.num_qubits < 1:
            raise QuantumCoreError("a state needs at least one qubit")
        amps = np.array(self.amplitudes, dtype=np.complex128)
        if amps.shape != (2**self.num_qubits,):
            raise QuantumCoreError(
                f"expected {2**self.num_qubits} amplitudes, got shape {amps.shape}"
            )
        if not np.all(np.isfinite(amps)):
            raise QuantumCoreError("amplitudes must be finite")
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise QuantumCoreError(f"state is not normalized (norm^2 = {norm!r})")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def basis(cls, bits: str | Sequence[int]) -> "StateVector":
        """Computational basis state from a bit string, qubit 0 first."""
        bits = [int(b) for b in bits]
        if not bits or any(b not in (0, 1) for b in bits):
            raise QuantumCoreError(f"invalid bit string {bits!r}")
        index = int("".join(map(str, bits)), 2)
        amps = np.zeros(2 ** len(bits), dtype=np.complex128)
        amps[index] = 1.0
        return cls(len(bits), amps)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def norm(self) -> float:
        return float(np.sqrt(np.vdot(self.amplitudes, self.amplitudes).real))

    def __len__(self) -> int:
        return self.amplitudes.shape[0]


def is_unitary(matrix: np.ndarray, tol: float = UNITARY_TOL) -> bool:
    matrix = np.asarray(matrix)
    dim = matrix.shape[0]
    if matrix.shape != (dim, dim) or dim & (dim - 1):
        return False
    return bool(np.max(np.abs(matrix.conj().T @ matrix - np.eye(dim))) <= tol)


def phase_angle(k: int, adjoint: bool = False) -> float:
    """theta_k = 2*pi / 2**k, negated for the adjoint rotation."""
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise QuantumCoreError(f"phase index k must be an integer >= 1, got {k!r}")
    theta = 2 * pi / 2**k
    return -theta if adjoint else theta


def _phase_factor(k: int, adjoint: bool) -> complex:
    # Exact values for the quarter turns keep H/P products free of 1e-17 noise.
    exact = {1: -1.0 + 0j, 2: 1j}
    if k in exact:
        value = exact[k]
    else:
        value = complex(np.exp(1j * phase_angle(k)))
    return value.conjugate() if adjoint else value


def hadamard_matrix() -> np.ndarray:
    return np.array([[1, 1], [1, -1]], dtype=np.complex128) * _SQRT2_INV


def pauli_x_matrix() -> np.ndarray:
    return np.array([[0, 1], [1, 0]], dtype=np.complex128)


def swap_matrix() -> np.ndarray:
    return np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=np.complex128
    )


def phase_matrix(k: int, adjoint: bool = False) -> np.ndarray:
    """diag(1, e^{i theta_k}) with theta_k = 2*pi/2**k."""
    phase_angle(k)
    return np.diag([1.0, _phase_factor(k, adjoint)]).astype(np.complex128)


def controlled_phase_matrix(k: int, adjoint: bool = False) -> np.ndarray:
    """The 4x4 controlled phase diag(1, 1, 1, e^{i theta_k}).

    The gate is diagonal and symmetric in its two wires, so which of them is
    called the control does not change the matrix.
    """
    phase_angle(k)
    return np.diag([1.0, 1.0, 1.0, _phase_factor(k, adjoint)]).astype(np.complex128)


def hadamard_tensor(n: int) -> np.ndarray:
    """H^{(x)n} with entries (-1)^{popcount(x & y)} / sqrt(2**n)."""
    if n < 1 or n > MAX_DENSE_QUBITS:
        raise QuantumCoreError(
            f"hadamard_tensor supports 1 <= n <= {MAX_DENSE_QUBITS}, got {n}"
        )
    idx = np.arange(2**n)
    anded = idx[:, None] & idx[None, :]
    parity = np.zeros_like(anded)
    for bit in range(n):
        parity ^= (anded >> bit) & 1
    return ((-1.0) ** parity / sqrt(2**n)).astype(np.complex128)


def apply_gate(
    state: StateVector,
    gate: np.ndarray,
    targets: Sequence[int],
    controls: Sequence[int] = (),
) -> StateVector:
    """Apply ``gate`` to ``targets``, conditioned on every control being |1>.

    ``gate`` acts on the targets in the listed order, the first target being
    the most significant bit of the gate's own index. The full-register
    matrix is never formed: the state is viewed as a rank-n tensor, the
    controlled slice is selected and the small gate is contracted into it.
    """
    n = state.num_qubits
    targets = [int(t) for t in targets]
    controls = [int(c) for c in controls]
    wires = targets + controls
    if not targets:
        raise QuantumCoreError("apply_gate needs at least one target")
    for w in wires:
        if not 0 <= w < n:
            raise QuantumCoreError(f"qubit index {w} out of range for {n} qubits")
    if len(set(wires)) != len(wires):
        raise QuantumCoreError(
            f"targets {targets} and controls {controls} must be distinct"
        )
    gate = np.asarray(gate, dtype=np.complex128)
    t = len(targets)
    if gate.shape != (2**t, 2**t):
        raise QuantumCoreError(
            f"gate of shape {gate.shape} does not act on {t} target qubit(s)"
        )

    psi = np.array(state.amplitudes).reshape((2,) * n)
    sel: list = [slice(None)] * n
    for c in controls:
        sel[c] = 1
    sel = tuple(sel)
    block = psi[sel]
    # Axis positions of the targets once the control axes are sliced away.
    remaining = [q for q in range(n) if q not in controls]
    axes = [remaining.index(q) for q in targets]

    g = gate.reshape((2,) * (2 * t))
    out = np.tensordot(g, block, axes=(list(range(t, 2 * t)), axes))
    out = np.moveaxis(out, list(range(t)), axes)
    psi[sel] = out
    return StateVector(n, psi.reshape(-1))


def align_global_phase(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Rotate ``b`` by a unit phase so it lines up with ``a`` at a's largest entry."""
    a = np.asarray(a)
    b = np.asarray(b)
    pivot = int(np.argmax(np.abs(a)))
    if abs(b[pivot]) == 0:
        return b
    ratio = a[pivot] / b[pivot]
    return b * (ratio / abs(ratio))


def equal_up_to_global_phase(a, b, tol: float = 1e-9) -> bool:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        return False
    return bool(np.max(np.abs(a - align_global_phase(a, b))) <= tol)
