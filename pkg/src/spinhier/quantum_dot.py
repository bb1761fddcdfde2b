"""Exchange coupling and scale estimates for a GaAs double quantum dot.

Two single-electron dots in a quartic double well, distance 2a apart, field B
along z.  The exchange splitting J between singlet and triplet is evaluated
from its closed form in the dimensionless field b, the dimensionless
half-distance d = a / a_B, and the Coulomb-strength parameter c.  All
dimensionful outputs are meV and nm, derived from the pinned constants table.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .constants import E2_MEV_NM, HBARC_MEV_NM, MEC2_MEV, MU_B_MEV_PER_T

BESSEL_MAX_ARG = 700.0  # exp overflow guard
_BESSEL_SERIES_CUTOFF = 15.0


@dataclass(frozen=True)
class DotParameters:
    """Material and geometry record for a coupled-dot pair.

    g: electron g-factor; hbar_omega0: confinement energy (meV); mass_ratio:
    effective mass over the electron mass; epsilon: dielectric constant;
    d: half-distance between the wells in units of the confinement Bohr
    radius; b_field: magnetic field along z (Tesla).
    """

    g: float
    hbar_omega0: float
    mass_ratio: float
    epsilon: float
    d: float
    b_field: float = 0.0

    def __post_init__(self):
        if self.hbar_omega0 <= 0:
            raise ValueError("confinement energy must be positive")
        if self.mass_ratio <= 0:
            raise ValueError("mass ratio must be positive")
        if self.epsilon < 1:
            raise ValueError("dielectric constant must be >= 1")
        if self.d <= 0:
            raise ValueError("half-distance must be positive")

    @classmethod
    def gaas(cls, d: float = 0.7, b_field: float = 0.0) -> "DotParameters":
        """Standard GaAs dot: g = -0.44, 3 meV confinement, m = 0.067 m_e, eps = 13.1."""
        return cls(g=-0.44, hbar_omega0=3.0, mass_ratio=0.067, epsilon=13.1,
                   d=d, b_field=b_field)


@dataclass(frozen=True)
class ExchangeResult:
    """Exchange evaluation at one field point."""

    b: float
    c: float
    j_mev: float


@dataclass(frozen=True)
class PhysicalEstimates:
    """Order-of-magnitude scales of the dot pair."""

    a_b_nm: float
    spin_orbit_ratio: float
    dipole_mev: float


def bohr_radius(p: DotParameters) -> float:
    """Confinement length sqrt(hbar / (m omega0)) in nm (about 20 nm for GaAs)."""
    return HBARC_MEV_NM / math.sqrt(p.mass_ratio * MEC2_MEV * p.hbar_omega0)


def dimensionless_field(p: DotParameters) -> float:
    """b = sqrt(1 + (omega_L / omega0)^2), with Larmor frequency eB / 2m.

    hbar * omega_L equals mu_B * B / mass_ratio; b = 1 at zero field and
    increases strictly with B.
    """
    if p.b_field < 0:
        raise ValueError("field must be non-negative")
    larmor = MU_B_MEV_PER_T * p.b_field / p.mass_ratio
    return math.sqrt(1.0 + (larmor / p.hbar_omega0) ** 2)


def coulomb_parameter(p: DotParameters) -> float:
    """Dimensionless Coulomb strength sqrt(pi/2) * (e^2 / eps a_B) / (hbar omega0)."""
    return math.sqrt(math.pi / 2) * (E2_MEV_NM / (p.epsilon * bohr_radius(p))) / p.hbar_omega0


def bessel_i0(x: float) -> float:
    """Modified Bessel function of the first kind, order zero.

    Power series below x = 15, asymptotic expansion (truncated at its smallest
    term) above; relative error below 1e-12 across 0 <= x <= 700.
    """
    if not 0.0 <= x <= BESSEL_MAX_ARG:
        raise ValueError(f"argument must be in [0, {BESSEL_MAX_ARG}], got {x}")
    if x < _BESSEL_SERIES_CUTOFF:
        quarter = 0.25 * x * x
        term = 1.0
        total = 1.0
        k = 1
        while True:
            term *= quarter / (k * k)
            new_total = total + term
            if new_total == total:
                return total
            total = new_total
            k += 1
    # I0(x) ~ e^x / sqrt(2 pi x) * sum_k [(2k-1)!!]^2 / (k! (8x)^k)
    total = 1.0
    term = 1.0
    k = 1
    while True:
        factor = (2 * k - 1) ** 2 / (8.0 * k * x)
        if factor >= 1.0:  # series started diverging
            break
        new_term = term * factor
        if new_term >= term:
            break
        term = new_term
        total += term
        if term < 1e-18 * total:
            break
        k += 1
    return math.exp(x) / math.sqrt(2.0 * math.pi * x) * total


def exchange_coupling(b: float, d: float, c: float) -> float:
    """Exchange splitting of the coupled pair in units of the confinement energy.

    J / (hbar omega0) = [ c sqrt(b) { e^{-b d^2} I0(b d^2)
                          - e^{d^2 (b - 1/b)} I0(d^2 (b - 1/b)) }
                          + 3/(4b) (1 + b d^2) ] / sinh(2 d^2 (2b - 1/b))
    """
    if d <= 0:
        raise ValueError("half-distance d must be positive")
    sinh_arg = 2.0 * d * d * (2.0 * b - 1.0 / b)
    if sinh_arg <= 0:
        raise ValueError(f"degenerate geometry: sinh argument {sinh_arg} <= 0")
    u = b * d * d
    v = d * d * (b - 1.0 / b)
    braces = math.exp(-u) * bessel_i0(u) - math.exp(v) * bessel_i0(v)
    return (c * math.sqrt(b) * braces + 3.0 / (4.0 * b) * (1.0 + u)) / math.sinh(sinh_arg)


def exchange_at_field(p: DotParameters, c: float | None = None) -> ExchangeResult:
    """Exchange coupling in meV at the parameter record's field point."""
    b = dimensionless_field(p)
    if c is None:
        c = coulomb_parameter(p)
    j = exchange_coupling(b, p.d, c) * p.hbar_omega0
    return ExchangeResult(b=b, c=c, j_mev=j)


def sweep_exchange(p: DotParameters, b_fields, c: float | None = None) -> list[ExchangeResult]:
    """Exchange coupling across a sequence of field values, in input order."""
    if c is None:
        c = coulomb_parameter(p)
    return [exchange_at_field(replace(p, b_field=float(b)), c) for b in b_fields]


def confinement_potential(x_nm: float, y_nm: float, p: DotParameters,
                          e_bias_v_per_nm: float = 0.0) -> float:
    """Double-well potential (meV) at a point, plus the bias-field term e x E.

    V = (m omega0^2 / 2) [ (x^2 - a^2)^2 / (4 a^2) + y^2 ] with well minima at
    (+-a, 0); the barrier height at the origin is (hbar omega0 / 8) d^2.
    """
    a = p.d * bohr_radius(p)
    stiffness = p.hbar_omega0 / bohr_radius(p) ** 2  # m omega0^2 in meV / nm^2
    well = 0.5 * stiffness * ((x_nm ** 2 - a ** 2) ** 2 / (4.0 * a ** 2) + y_nm ** 2)
    bias = 1000.0 * x_nm * e_bias_v_per_nm  # e * x * E, volts -> meV
    return well + bias


def physical_estimates(p: DotParameters) -> PhysicalEstimates:
    """Confinement length, spin-orbit ratio, and dipole coupling scale.

    spin_orbit_ratio is H_SO / (hbar omega0) = hbar omega0 / (2 m c^2) for
    L.S of order hbar^2; dipole_mev is (mu_0 / 4 pi)(g mu_B)^2 / a_B^3,
    rewritten as g^2 e^2 (hbar c)^2 / (4 (m_e c^2)^2 a_B^3) so only pinned
    constants enter.
    """
    a_b = bohr_radius(p)
    spin_orbit = p.hbar_omega0 / (2.0 * p.mass_ratio * MEC2_MEV)
    dipole = (p.g ** 2 * E2_MEV_NM * HBARC_MEV_NM ** 2
              / (4.0 * MEC2_MEV ** 2 * a_b ** 3))
    return PhysicalEstimates(a_b_nm=a_b, spin_orbit_ratio=spin_orbit, dipole_mev=dipole)
