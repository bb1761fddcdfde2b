"""Hierarchic multiplet encoding of spin-1/2 registers.

Subpackages:

- ``angular_momentum``: Clebsch-Gordan coefficients and pair coupling matrices
- ``hierarchy``: coupling trees, the hierarchic unitary, ladder projectors
- ``gates``: two-qubit gate constants, multiplet-basis conversion, exchange XOR
- ``dynamics``: Heisenberg/Zeeman Hamiltonians and exchange-pulse evolution
- ``quantum_dot``: GaAs double-dot exchange coupling and physical estimates
- ``wavelet``: classical Haar pyramid baseline
- ``cli``: batch command line emitting JSON/CSV
"""

from . import (
    angular_momentum,
    constants,
    dynamics,
    gates,
    hierarchy,
    quantum_dot,
    wavelet,
)

__all__ = [
    "angular_momentum",
    "constants",
    "dynamics",
    "gates",
    "hierarchy",
    "quantum_dot",
    "wavelet",
]

__version__ = "0.1.0"
