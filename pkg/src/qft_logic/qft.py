"""Quantum Fourier transform circuits.

Qubit 0 is the top wire and the most significant bit of the encoded
integer. The swap network at the end is emitted as real gates so exported
circuits look like the textbook drawing.
"""

from __future__ import annotations

from .circuit import Circuit, CircuitBuilder, CircuitError, inverse

MAX_QFT_QUBITS = 10


def _check_width(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_QFT_QUBITS:
        raise CircuitError(f"QFT width must be in 1..{MAX_QFT_QUBITS}, got {n!r}")


def build_qft(n: int) -> Circuit:
    """|a> -> 2^{-n/2} sum_k exp(2 pi i a k / 2^n) |k>.

    Each wire j gets a Hadamard followed by controlled phases CP(k) from wire
    j+k-1, k = 2..n-j; the wire order is then reversed with swaps.
    """
    _check_width(n)
    b = CircuitBuilder(n, label=f"qft({n})")
    for j in range(n):
        b.h(j)
        for k in range(2, n - j + 1):
            b.cphase(k, control=j + k - 1, target=j)
    for i in range(n // 2):
        b.swap(i, n - 1 - i)
    return b.build(fourier_balance=1)


def build_iqft(n: int) -> Circuit:
    _check_width(n)
    return inverse(build_qft(n)).relabel(f"iqft({n})")
