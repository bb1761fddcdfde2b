"""Heisenberg exchange dynamics of a spin pair under time-dependent pulses.

Unit system: energies in meV, times in ns, with hbar from the pinned constants
table.  Physical evolution uses exp(-i H t / hbar); a sign flag flips the
exponent for callers wanting the conjugate convention.  Since the exchange
Hamiltonian commutes with itself at all times, the pulse integrator converges
to the closed form exp(-i (integral of J) S1.S2 / hbar) and is exact for
constant pulses.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .constants import HBAR_MEV_NS, MU_B_MEV_PER_T
from .gates import S1Z, S2Z, SINGLET_PROJECTOR, exchange_propagator

# One-qubit spin operators in the (down, up) basis.
_SP = np.array([[0.0, 0.0], [1.0, 0.0]])  # raising: down -> up
_SM = _SP.T
_SX = 0.5 * (_SP + _SM)
_SY = (_SP - _SM) / 2j
_SZ = np.diag([-0.5, 0.5])

_EYE2 = np.eye(2)

SPIN_DOT = (
    np.kron(_SX, _SX) + np.kron(_SY, _SY) + np.kron(_SZ, _SZ)
).real  # S1.S2; real in this basis

TOTAL_SZ = S1Z + S2Z


@dataclass(frozen=True)
class PulseProfile:
    """Exchange coupling J(t) sampled at uniform times over [0, duration].

    ``samples`` are J values in meV; ``duration_ns`` is the pulse length.
    The pulse area is the trapezoid-rule integral of J divided by hbar.
    """

    samples: tuple[float, ...]
    duration_ns: float

    def __post_init__(self):
        if self.duration_ns <= 0:
            raise ValueError(f"pulse duration must be positive, got {self.duration_ns}")
        if len(self.samples) < 2:
            raise ValueError("a pulse needs at least 2 samples")
        if not np.all(np.isfinite(self.samples)):
            raise ValueError("pulse samples must be finite")

    @property
    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.duration_ns, len(self.samples))

    def area(self) -> float:
        """Dimensionless pulse area: trapezoid integral of J over hbar."""
        return float(np.trapezoid(self.samples, self.times) / HBAR_MEV_NS)


def heisenberg_hamiltonian(j_mev: float) -> np.ndarray:
    """Exchange Hamiltonian J * S1.S2 for a spin pair (meV).

    Eigenvalues are J/4 on the triplet and -3J/4 on the singlet, so the
    singlet-triplet splitting equals J.
    """
    if not np.isfinite(j_mev):
        raise ValueError(f"exchange coupling must be finite, got {j_mev}")
    return j_mev * SPIN_DOT


def zeeman_hamiltonian(b_tesla: float, g: float) -> np.ndarray:
    """Zeeman term g * mu_B * B * (S_1z + S_2z) for a field along z (meV)."""
    if not (np.isfinite(b_tesla) and np.isfinite(g)):
        raise ValueError("field and g-factor must be finite")
    return g * MU_B_MEV_PER_T * b_tesla * TOTAL_SZ


def evolve_pulse(profile: PulseProfile, steps: int, sign: int = -1) -> np.ndarray:
    """Propagator of an exchange pulse by midpoint-sampled piecewise-constant steps.

    Each step applies exp(sign * i * J(t_mid) * dt * S1.S2 / hbar); the product
    is time ordered (later steps act on the left).  Exact for constant J.
    """
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    dt = profile.duration_ns / steps
    midpoints = (np.arange(steps) + 0.5) * dt
    j_mid = np.interp(midpoints, profile.times, profile.samples)
    # All step generators commute, so the ordered product collapses to a
    # single exchange rotation by the accumulated midpoint-rule area.
    total_angle = float(np.sum(j_mid) * dt / HBAR_MEV_NS)
    return exchange_propagator(total_angle, sign)


def pulse_for_area(area: float, j0_mev: float, samples: int = 2) -> PulseProfile:
    """Constant pulse with the requested dimensionless area at height J0.

    Duration is hbar * area / J0; area and J0 must have the same sign.
    """
    if j0_mev == 0:
        raise ValueError("degenerate pulse: J0 must be nonzero")
    duration = HBAR_MEV_NS * area / j0_mev
    if duration <= 0:
        raise ValueError(
            f"degenerate pulse: area {area} with J0 {j0_mev} gives duration {duration}"
        )
    return PulseProfile((float(j0_mev),) * samples, duration)
