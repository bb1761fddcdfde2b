"""Exact-convention Clebsch-Gordan coefficients and pairwise coupling matrices.

Angular momenta are stored as twice their value (``twice_j``), so half-integer
spins are exact integers and parity checks are trivial.  Coefficients follow
the Condon-Shortley phase convention and are evaluated through the Racah
closed-form sum with exact integer factorial arithmetic; only the final square
root is taken in floating point.  This is free of cancellation for every
j <= MAX_TWICE_J / 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, sqrt

import numpy as np

# Largest supported 2j.  Beyond spin 8 the factorial ratios grow without a use
# case in this package; callers get a clear error instead of silent slowdowns.
MAX_TWICE_J = 16


class InvalidLabelError(ValueError):
    """Angular-momentum label violates parity, range, or sign constraints."""


def _check_twice_j(twice_j: int) -> None:
    if not isinstance(twice_j, (int, np.integer)) or isinstance(twice_j, bool):
        raise InvalidLabelError(f"twice_j must be an integer, got {twice_j!r}")
    if twice_j < 0:
        raise InvalidLabelError(f"twice_j must be non-negative, got {twice_j}")
    if twice_j > MAX_TWICE_J:
        raise InvalidLabelError(
            f"twice_j = {twice_j} exceeds the supported maximum {MAX_TWICE_J}"
        )


def _check_twice_m(twice_j: int, twice_m: int) -> None:
    if not isinstance(twice_m, (int, np.integer)) or isinstance(twice_m, bool):
        raise InvalidLabelError(f"twice_m must be an integer, got {twice_m!r}")
    if (twice_j - twice_m) % 2 != 0:
        raise InvalidLabelError(
            f"parity mismatch: twice_m = {twice_m} with twice_j = {twice_j}"
        )
    if abs(twice_m) > twice_j:
        raise InvalidLabelError(f"|twice_m| = {abs(twice_m)} exceeds twice_j = {twice_j}")


@dataclass(frozen=True, order=True)
class SpinLabel:
    """A single angular momentum j, stored exactly as 2j."""

    twice_j: int

    def __post_init__(self):
        _check_twice_j(self.twice_j)

    @property
    def j(self) -> float:
        return self.twice_j / 2

    @property
    def multiplicity(self) -> int:
        """Number of magnetic sublevels, 2j + 1."""
        return self.twice_j + 1

    def twice_m_values(self) -> range:
        """Magnetic labels 2m in ascending order, -2j ... +2j in steps of 2."""
        return range(-self.twice_j, self.twice_j + 1, 2)


@dataclass(frozen=True, order=True)
class MultipletLabel:
    """A (J, M) pair labelling one state of a total-spin multiplet."""

    twice_j: int
    twice_m: int

    def __post_init__(self):
        _check_twice_j(self.twice_j)
        _check_twice_m(self.twice_j, self.twice_m)

    @property
    def j(self) -> float:
        return self.twice_j / 2

    @property
    def m(self) -> float:
        return self.twice_m / 2

    @property
    def dimension(self) -> int:
        return self.twice_j + 1


def _racah_sum(tj1, tm1, tj2, tm2, tj, tm) -> Fraction:
    """Alternating Racah sum; exact rational value."""
    # All arguments below are guaranteed integral by the parity checks.
    b1 = (tj1 + tj2 - tj) // 2
    b2 = (tj1 - tm1) // 2
    b3 = (tj2 + tm2) // 2
    a1 = (tj - tj2 + tm1) // 2
    a2 = (tj - tj1 - tm2) // 2
    k_min = max(0, -a1, -a2)
    k_max = min(b1, b2, b3)
    total = Fraction(0)
    for k in range(k_min, k_max + 1):
        den = (
            factorial(k)
            * factorial(b1 - k)
            * factorial(b2 - k)
            * factorial(b3 - k)
            * factorial(a1 + k)
            * factorial(a2 + k)
        )
        total += Fraction(-1 if k % 2 else 1, den)
    return total


def cg(j1: SpinLabel, twice_m1: int, j2: SpinLabel, twice_m2: int,
       target: MultipletLabel) -> float:
    """Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M>, Condon-Shortley phase.

    Magnetic numbers are passed as 2m.  Returns exactly 0.0 when the
    selection rules m1 + m2 = M or |j1 - j2| <= J <= j1 + j2 fail.
    """
    _check_twice_m(j1.twice_j, twice_m1)
    _check_twice_m(j2.twice_j, twice_m2)
    tj1, tj2 = j1.twice_j, j2.twice_j
    tj, tm = target.twice_j, target.twice_m
    if twice_m1 + twice_m2 != tm:
        return 0.0
    if tj < abs(tj1 - tj2) or tj > tj1 + tj2 or (tj1 + tj2 + tj) % 2 != 0:
        return 0.0

    s = _racah_sum(tj1, twice_m1, tj2, twice_m2, tj, tm)
    if s == 0:
        return 0.0
    # Squared prefactor as an exact rational; the sign lives in the sum.
    delta2 = Fraction(
        factorial((tj1 + tj2 - tj) // 2)
        * factorial((tj1 - tj2 + tj) // 2)
        * factorial((-tj1 + tj2 + tj) // 2),
        factorial((tj1 + tj2 + tj) // 2 + 1),
    )
    norm2 = (
        factorial((tj + tm) // 2)
        * factorial((tj - tm) // 2)
        * factorial((tj1 - twice_m1) // 2)
        * factorial((tj1 + twice_m1) // 2)
        * factorial((tj2 - twice_m2) // 2)
        * factorial((tj2 + twice_m2) // 2)
    )
    value2 = (tj + 1) * delta2 * norm2 * s * s
    return (1.0 if s > 0 else -1.0) * sqrt(float(value2))


def multiplet_content(j1: SpinLabel, j2: SpinLabel) -> list[SpinLabel]:
    """Total spins J reached by coupling j1 with j2, descending, each once.

    Dimensions sum to (2 j1 + 1)(2 j2 + 1).
    """
    lo = abs(j1.twice_j - j2.twice_j)
    hi = j1.twice_j + j2.twice_j
    return [SpinLabel(tj) for tj in range(hi, lo - 1, -2)]


def _product_rows(j1: SpinLabel, j2: SpinLabel):
    """(2m1, 2m2) pairs; first factor slowest, magnetic labels ascending."""
    return [(tm1, tm2) for tm1 in j1.twice_m_values() for tm2 in j2.twice_m_values()]


def _multiplet_columns(j1: SpinLabel, j2: SpinLabel) -> list[MultipletLabel]:
    """(J, M) labels ordered by ascending J, then ascending M."""
    cols = []
    for spin in reversed(multiplet_content(j1, j2)):
        for tm in spin.twice_m_values():
            cols.append(MultipletLabel(spin.twice_j, tm))
    return cols


def couple_pair_matrix(j1: SpinLabel, j2: SpinLabel) -> np.ndarray:
    """Real orthogonal change of basis between a product pair and its multiplets.

    Entry [row, col] is the Clebsch-Gordan coefficient between product state
    ``row`` (first factor varies slowest, m ascending, so for two spin-1/2 the
    rows are down-down, down-up, up-down, up-up) and multiplet state ``col``
    (ascending J, then ascending M).  Columns are the coupled states expressed
    in the product basis.
    """
    rows = _product_rows(j1, j2)
    cols = _multiplet_columns(j1, j2)
    a = np.zeros((len(rows), len(cols)))
    for i, (tm1, tm2) in enumerate(rows):
        for k, label in enumerate(cols):
            a[i, k] = cg(j1, tm1, j2, tm2, label)
    return a
