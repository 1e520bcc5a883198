"""Hyperbolic complex numbers, the hyperbolic Pauli algebra and the mass operator.

The package is organised bottom-up:

* :mod:`.hypercomplex`       the ring H = span{1, i, j, ij}
* :mod:`.pauli_algebra`      paravectors and the complexified Pauli algebra over H
* :mod:`.spin_group`         rotors, boosts and the spinor action
* :mod:`.hyperbolic_unitary` U(n,H), SU(n,H) and their generators
* :mod:`.fields`             plane-wave and lattice checks of M^2 = p pbar
* :mod:`.checks`, :mod:`.cli` randomised suites and the command line
"""

from .errors import (
    BadAxis,
    GridMismatch,
    HyperPauliError,
    IncommensurateWave,
    NonRealResult,
    NotHermitian,
    NotInvertible,
    NotParavector,
    SizeMismatch,
)
from .hmatrix import HMatrix
from .hypercomplex import HNumber, SplitPair
from .pauli_algebra import AlgebraElement, Paravector
from .spin_group import HSpinor, SpinTransform

__all__ = [
    "AlgebraElement",
    "BadAxis",
    "GridMismatch",
    "HMatrix",
    "HNumber",
    "HSpinor",
    "HyperPauliError",
    "IncommensurateWave",
    "NonRealResult",
    "NotHermitian",
    "NotInvertible",
    "NotParavector",
    "Paravector",
    "SizeMismatch",
    "SpinTransform",
    "SplitPair",
]

__version__ = "0.1.0"
