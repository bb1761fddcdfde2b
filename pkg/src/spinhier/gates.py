"""Two-qubit gate constants and the exchange-built XOR sequence.

Product-basis index convention: down = 0, up = 1, first (control) qubit most
significant, so the basis order is down-down, down-up, up-down, up-up.  Gates
generated by exchange pulses carry physically irrelevant global phases, so
equality of gates is always judged through :func:`gate_fidelity`, never
entrywise.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

UNITARITY_TOL = 1e-10


class BasisTag(Enum):
    """Which 4-dimensional basis a two-qubit matrix is expressed in."""

    PRODUCT = "product"
    MULTIPLET = "multiplet"


def unitarity_defect(u: np.ndarray) -> float:
    """Max-norm of U^dagger U - I."""
    u = np.asarray(u)
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))


def _checked(u: np.ndarray) -> np.ndarray:
    if unitarity_defect(u) >= UNITARITY_TOL:
        raise ValueError("constructed gate failed the unitarity bound")
    return u


# Single-qubit spin-z in the (down, up) basis.
_SZ = np.diag([-0.5, 0.5])

S1Z = np.kron(_SZ, np.eye(2))
S2Z = np.kron(np.eye(2), _SZ)

# Projector onto the two-spin singlet (up-down minus down-up) / sqrt(2).
_SINGLET = np.array([0.0, -1.0, 1.0, 0.0]) / np.sqrt(2.0)
SINGLET_PROJECTOR = np.outer(_SINGLET, _SINGLET)


def cnot_product() -> np.ndarray:
    """Controlled-NOT in the product basis: flips the target when the control is up."""
    return _checked(np.array([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 1.0, 0.0],
    ]))


def to_multiplet(op: np.ndarray, a: np.ndarray) -> np.ndarray:
    """Express ``op`` in the multiplet basis: A^{-1} op A.

    ``a`` is the product-to-multiplet coupling matrix (columns are multiplet
    states in the product basis).  Similarity preserves the spectrum.
    """
    op = np.asarray(op)
    a = np.asarray(a)
    if op.shape != a.shape or op.shape[0] != op.shape[1]:
        raise ValueError(f"dimension mismatch: op {op.shape} vs basis {a.shape}")
    return np.linalg.solve(a, op @ a)


def single_spin_z_rotation(which: int, angle: float) -> np.ndarray:
    """exp(i * angle * S_z) on qubit 1 or 2 of a pair (diagonal, 4x4)."""
    if which not in (1, 2):
        raise ValueError(f"qubit index must be 1 or 2, got {which}")
    sz = S1Z if which == 1 else S2Z
    return np.diag(np.exp(1j * angle * np.diag(sz)))


def swap_gate() -> np.ndarray:
    """Exchange of the two qubits; +1 on the triplet, -1 on the singlet."""
    return _checked(np.array([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]))


def exchange_propagator(angle: float, sign: int = -1) -> np.ndarray:
    """exp(sign * i * angle * S1.S2), via the triplet/singlet split.

    S1.S2 is angle/4 on the triplet and -3*angle/4 on the singlet, so the
    exponential is assembled from the two projectors in closed form.
    """
    if sign not in (-1, 1):
        raise ValueError(f"sign must be -1 or +1, got {sign}")
    triplet = np.eye(4) - SINGLET_PROJECTOR
    return (np.exp(sign * 0.25j * angle) * triplet
            + np.exp(-sign * 0.75j * angle) * SINGLET_PROJECTOR)


def sqrt_swap_gate(sign: int = -1) -> np.ndarray:
    """Square root of swap generated by a half-area exchange pulse.

    Default convention exp(-i (pi/2) S1.S2): triplet phase e^{-i pi/8},
    singlet e^{+3 i pi/8}.  ``sign=+1`` selects the conjugate convention.
    Squaring gives swap up to a global phase either way.
    """
    return _checked(exchange_propagator(np.pi / 2, sign))


def xor_sequence(sign: int = -1) -> np.ndarray:
    """Five-factor exchange sequence: z-rotations around two half-swaps.

    Evaluates e^{i pi/2 S_1z} e^{-i pi/2 S_2z} sqrt_swap e^{i pi S_1z}
    sqrt_swap, rightmost factor first.  The product is a conditional phase
    flip: diagonal, -1 on up-up relative to the rest, up to a global phase.
    A Hadamard on the target qubit converts it to CNOT.
    """
    half_swap = sqrt_swap_gate(sign)
    return _checked(
        single_spin_z_rotation(1, np.pi / 2)
        @ single_spin_z_rotation(2, -np.pi / 2)
        @ half_swap
        @ single_spin_z_rotation(1, np.pi)
        @ half_swap
    )


def conditional_phase_flip() -> np.ndarray:
    """Reference target for the XOR sequence: -1 on up-up, +1 elsewhere."""
    return np.diag([1.0, 1.0, 1.0, -1.0])


def gate_fidelity(u: np.ndarray, v: np.ndarray) -> float:
    """|trace(U^dagger V)| / dim; equals 1 iff U and V agree up to a global phase."""
    u = np.asarray(u)
    v = np.asarray(v)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return float(abs(np.trace(u.conj().T @ v)) / u.shape[0])
