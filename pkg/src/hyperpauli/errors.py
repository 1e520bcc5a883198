"""Exception types raised across the package."""


class HyperPauliError(Exception):
    """Base class for all package errors."""


class NotInvertible(HyperPauliError, ArithmeticError):
    """A hyperbolic complex number (or matrix) has a vanishing idempotent component."""


class NonRealResult(HyperPauliError, ValueError):
    """A quantity that must be real carries i, j or ij parts above tolerance."""


class NotParavector(HyperPauliError, ValueError):
    """An algebra element is not of the form x0 + j x.sigma within tolerance."""


class BadAxis(HyperPauliError, ValueError):
    """A rotation axis or boost direction is not a unit 3-vector."""


class NotHermitian(HyperPauliError, ValueError):
    """A generator matrix is not Hermitian."""


class IncommensurateWave(HyperPauliError, ValueError):
    """A plane wave does not fit an integer number of periods in the periodic box."""


class GridMismatch(HyperPauliError, ValueError):
    """Two lattice fields live on different grids."""


class SizeMismatch(HyperPauliError, ValueError):
    """Component counts disagree with the generator basis."""
