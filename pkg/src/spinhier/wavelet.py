"""Classical Haar pyramid: the reference scheme the spin hierarchy mirrors.

One-dimensional orthonormal filter-bank decomposition on dyadic-length
signals.  The low-pass output at each level is (s_{2k} + s_{2k+1}) / sqrt(2)
for the Haar taps, the high-pass output the matching difference; iterating
halves the resolution per level while conserving coefficient count and
energy.  Filters longer than two taps are applied circularly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np


@dataclass(frozen=True)
class FilterPair:
    """Low-pass / high-pass analysis taps h and g."""

    h: tuple[float, ...]
    g: tuple[float, ...]

    def __post_init__(self):
        if len(self.h) == 0 or len(self.g) == 0:
            raise ValueError("filter taps must be non-empty")


def haar_filter() -> FilterPair:
    """Orthonormal Haar pair: h = (1, 1)/sqrt(2), g = (1, -1)/sqrt(2)."""
    s = 1.0 / sqrt(2.0)
    return FilterPair(h=(s, s), g=(s, -s))


@dataclass(frozen=True)
class PyramidDecomposition:
    """Approximation at the coarsest level plus details per level.

    ``details[0]`` is the finest detail band (length n/2), ``details[-1]``
    the coarsest (same length as ``approximation``).  Total coefficient count
    equals the input length.
    """

    approximation: np.ndarray
    details: tuple[np.ndarray, ...]

    @property
    def levels(self) -> int:
        return len(self.details)

    def coefficient_count(self) -> int:
        return len(self.approximation) + sum(len(d) for d in self.details)


def _analysis_step(signal: np.ndarray, taps) -> np.ndarray:
    n = len(signal)
    out = np.zeros(n // 2)
    for offset, tap in enumerate(taps):
        out += tap * signal[np.arange(offset, offset + n, 2) % n]
    return out


def haar_step(signal) -> tuple[np.ndarray, np.ndarray]:
    """One Haar split: pairwise sums and differences over sqrt(2).

    Energy is conserved: |s|^2 = |s'|^2 + |d'|^2.
    """
    signal = np.asarray(signal, dtype=float)
    if signal.ndim != 1 or len(signal) < 2 or len(signal) % 2 != 0:
        raise ValueError(f"signal length must be even and >= 2, got shape {signal.shape}")
    pair = haar_filter()
    return _analysis_step(signal, pair.h), _analysis_step(signal, pair.g)


def _check_dyadic(signal: np.ndarray) -> None:
    n = len(signal)
    if n < 1 or n & (n - 1) != 0:
        raise ValueError(f"signal length must be a power of two, got {n}")


def pyramid_forward(signal, levels: int, filters: FilterPair | None = None) -> PyramidDecomposition:
    """Iterated filter-bank analysis down to the requested level."""
    signal = np.asarray(signal, dtype=float)
    _check_dyadic(signal)
    max_levels = len(signal).bit_length() - 1
    if not 0 <= levels <= max_levels:
        raise ValueError(f"levels must be in 0..{max_levels} for length {len(signal)}")
    if filters is None:
        filters = haar_filter()
    approx = signal
    details = []
    for _ in range(levels):
        low = _analysis_step(approx, filters.h)
        high = _analysis_step(approx, filters.g)
        details.append(high)
        approx = low
    return PyramidDecomposition(approximation=approx, details=tuple(details))


def pyramid_inverse(decomposition: PyramidDecomposition,
                    filters: FilterPair | None = None) -> np.ndarray:
    """Exact reconstruction from an orthonormal pyramid decomposition."""
    if filters is None:
        filters = haar_filter()
    approx = np.asarray(decomposition.approximation, dtype=float)
    for high in reversed(decomposition.details):
        high = np.asarray(high, dtype=float)
        if len(high) != len(approx):
            raise ValueError(
                f"detail length {len(high)} does not match approximation {len(approx)}"
            )
        n = 2 * len(approx)
        signal = np.zeros(n)
        # Adjoint of the analysis step: transpose of the decimated convolution.
        for offset, tap in enumerate(filters.h):
            np.add.at(signal, np.arange(offset, offset + n, 2) % n, tap * approx)
        for offset, tap in enumerate(filters.g):
            np.add.at(signal, np.arange(offset, offset + n, 2) % n, tap * high)
        approx = signal
    return approx
