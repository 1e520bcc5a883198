"""The complexified Pauli algebra over H.

Elements are written a = c0 + c1 s1 + c2 s2 + c3 s3 with HNumber
coefficients commuting past the Pauli units s_k.  The spacetime basis is

    e0 = 1,   e_k = j s_k,

so e_k e_l = ij eps_klm e_m for k != l and e_k e_k = 1.  Reversion flips i
on every coefficient (Hermitian conjugation), conjugation flips both i and
j, which sends e_k to -e_k.  The paravector x = x^mu e_mu satisfies
x xbar = (x0^2 - |x|^2) 1.

The 2x2 matrix representation (``matrix_rep``/``from_matrix``) is kept as
an independent route for products and traces.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import hypercomplex as hc
from .errors import NonRealResult, NotParavector
from .hmatrix import HMatrix
from .hypercomplex import HNumber, I, IJ, J, ONE, ZERO

# Levi-Civita on spatial indices 0..2 (eps_012 = +1)
_EPS_PAIRS = ((1, 2, 0), (2, 0, 1), (0, 1, 2))


@dataclass(frozen=True, slots=True)
class AlgebraElement:
    c0: HNumber = ZERO
    c1: HNumber = ZERO
    c2: HNumber = ZERO
    c3: HNumber = ZERO

    def __post_init__(self) -> None:
        for name in ("c0", "c1", "c2", "c3"):
            object.__setattr__(self, name, HNumber.coerce(getattr(self, name)))

    @classmethod
    def scalar(cls, z) -> "AlgebraElement":
        return cls(HNumber.coerce(z))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> "AlgebraElement":
        return cls(*coeffs)

    @classmethod
    def from_array(cls, arr) -> "AlgebraElement":
        """Inverse of :meth:`as_array` (shape (4, 4))."""
        arr = np.asarray(arr, dtype=float)
        return cls(*(HNumber.from_array(row) for row in arr))

    @property
    def coeffs(self) -> tuple[HNumber, HNumber, HNumber, HNumber]:
        return (self.c0, self.c1, self.c2, self.c3)

    @property
    def vec(self) -> tuple[HNumber, HNumber, HNumber]:
        return (self.c1, self.c2, self.c3)

    def as_array(self) -> np.ndarray:
        return np.array([c.as_tuple() for c in self.coeffs])

    # arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            try:
                other = AlgebraElement.scalar(other)
            except TypeError:
                return NotImplemented
        return AlgebraElement(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            try:
                other = AlgebraElement.scalar(other)
            except TypeError:
                return NotImplemented
        return AlgebraElement(*(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(*(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return gp(self, other)
        try:
            z = HNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return AlgebraElement(*(c * z for c in self.coeffs))

    def __rmul__(self, other):
        try:
            z = HNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return AlgebraElement(*(z * c for c in self.coeffs))

    def __truediv__(self, other):
        return self * (1.0 / HNumber.coerce(other))

    # shorthand -----------------------------------------------------------

    def rev(self) -> "AlgebraElement":
        return reversion(self)

    def bar(self) -> "AlgebraElement":
        return conjugation(self)

    def norm(self) -> float:
        return float(np.sqrt(np.sum(self.as_array() ** 2)))

    def isclose(self, other, tol: float = 1e-10) -> bool:
        if not isinstance(other, AlgebraElement):
            other = AlgebraElement.scalar(other)
        scale = max(1.0, self.norm(), other.norm())
        return (self - other).norm() <= tol * scale

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, obj: list) -> "AlgebraElement":
        if len(obj) != 4:
            raise ValueError("AlgebraElement JSON must hold 4 coefficients")
        return cls(*(HNumber.from_json(c) for c in obj))

    def __str__(self) -> str:
        return " + ".join(f"{c}{b}" for c, b in zip(self.coeffs, ("", "s1", "s2", "s3")))


IDENTITY = AlgebraElement(ONE)
SIGMA = (
    AlgebraElement(ZERO, ONE, ZERO, ZERO),
    AlgebraElement(ZERO, ZERO, ONE, ZERO),
    AlgebraElement(ZERO, ZERO, ZERO, ONE),
)
#: spacetime basis e_mu = (1, j s_k)
E = (
    IDENTITY,
    AlgebraElement(ZERO, J, ZERO, ZERO),
    AlgebraElement(ZERO, ZERO, J, ZERO),
    AlgebraElement(ZERO, ZERO, ZERO, J),
)
PSEUDOSCALAR = AlgebraElement(IJ)


def gp(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Geometric product.

    (a0 + a.s)(b0 + b.s) = a0 b0 + a.b + (a0 b + b0 a + i a x b).s
    """
    av, bv = a.vec, b.vec
    scalar = a.c0 * b.c0 + av[0] * bv[0] + av[1] * bv[1] + av[2] * bv[2]
    vec = []
    for m, (k, l, _) in enumerate(_EPS_PAIRS):
        cross = av[k] * bv[l] - av[l] * bv[k]
        vec.append(a.c0 * bv[m] + b.c0 * av[m] + I * cross)
    return AlgebraElement(scalar, *vec)


def reversion(a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(*(hc.conj_i(c) for c in a.coeffs))


def conjugation(a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(*(hc.conj_full(c) for c in a.coeffs))


def grade_involution(a: AlgebraElement) -> AlgebraElement:
    """conjugation o reversion: flips j only."""
    return AlgebraElement(*(hc.conj_j(c) for c in a.coeffs))


def trace(a: AlgebraElement) -> HNumber:
    return a.c0 * 2.0


def scalar_product_general(a: AlgebraElement, b: AlgebraElement) -> HNumber:
    """Half the trace of bar(a) b, without any reality assertion."""
    return trace(gp(conjugation(a), b)) * 0.5


# ---------------------------------------------------------------------------
# paravectors


@dataclass(frozen=True, slots=True)
class Paravector:
    x0: float = 0.0
    x1: float = 0.0
    x2: float = 0.0
    x3: float = 0.0

    def __post_init__(self) -> None:
        for name in ("x0", "x1", "x2", "x3"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @classmethod
    def from_seq(cls, seq: Sequence[float]) -> "Paravector":
        if len(seq) != 4:
            raise ValueError("a paravector needs exactly 4 coordinates")
        return cls(*seq)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.x0, self.x1, self.x2, self.x3)

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple())

    def __add__(self, other: "Paravector") -> "Paravector":
        return Paravector(*(a + b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __sub__(self, other: "Paravector") -> "Paravector":
        return Paravector(*(a - b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __mul__(self, s: float) -> "Paravector":
        return Paravector(*(s * a for a in self.as_tuple()))

    __rmul__ = __mul__

    def __neg__(self) -> "Paravector":
        return self * -1.0

    def to_element(self) -> AlgebraElement:
        return AlgebraElement(
            HNumber(self.x0), HNumber(0, 0, self.x1), HNumber(0, 0, self.x2), HNumber(0, 0, self.x3)
        )

    def euclid_norm(self) -> float:
        return float(np.linalg.norm(self.as_array()))

    def to_json(self) -> list[float]:
        return list(self.as_tuple())


def paravector_residue(a: AlgebraElement) -> float:
    """Size of the parts of ``a`` outside span{1, j s_k}."""
    arr = a.as_array()
    off = np.concatenate([arr[0, [1, 2, 3]], arr[1:, [0, 1, 3]].ravel()])
    return float(np.sqrt(np.sum(off * off)))


def to_paravector(a: AlgebraElement, tol: float = 1e-11) -> Paravector:
    """Extract x^mu from x0 + j x.s; raise :class:`NotParavector` above ``tol``."""
    res = paravector_residue(a)
    if res > tol * max(1.0, a.norm()):
        raise NotParavector(f"non-paravector residue {res:.3e} exceeds tolerance")
    return Paravector(a.c0.x, a.c1.v, a.c2.v, a.c3.v)


def minkowski(x: Paravector, y: Paravector, tol: float = 1e-12) -> float:
    """(x, y) = 1/2 tr(bar(x) y), asserted real."""
    val = scalar_product_general(x.to_element(), y.to_element())
    scale = max(1.0, x.euclid_norm() * y.euclid_norm())
    if max(abs(val.y), abs(val.v), abs(val.w)) > tol * scale:
        raise NonRealResult(f"Minkowski product {val} is not real")
    return val.x


# ---------------------------------------------------------------------------
# grades


class GradeParts(NamedTuple):
    scalar: AlgebraElement
    vector: AlgebraElement
    bivector: AlgebraElement
    pseudoscalar: AlgebraElement


def grade_decompose(a: AlgebraElement) -> GradeParts:
    """Split ``a`` by grade of the real algebra span{1, j s_k, i s_k, ij}.

    The remaining eight real dimensions are reached by complexifying with j;
    each grade therefore carries a coefficient in span{1, j}:

    * scalar       x0 + v0 j
    * vector       (v_k + x_k j) * (j s_k)    = v_k j s_k + x_k s_k
    * bivector     (y_k + w_k j) * (i s_k)    = y_k i s_k + w_k ij s_k
    * pseudoscalar (w0 + y0 j) * ij           = w0 ij + y0 i
    """
    c0 = a.c0
    scalar = AlgebraElement(HNumber(c0.x, 0, c0.v, 0))
    pseudo = AlgebraElement(HNumber(0, c0.y, 0, c0.w))
    vector = AlgebraElement(ZERO, *(HNumber(c.x, 0, c.v, 0) for c in a.vec))
    bivector = AlgebraElement(ZERO, *(HNumber(0, c.y, 0, c.w) for c in a.vec))
    return GradeParts(scalar, vector, bivector, pseudo)


def is_real_subalgebra(a: AlgebraElement, tol: float = 0.0) -> bool:
    """True iff ``a`` lies in span{1, j s_k, i s_k, ij}."""
    arr = a.as_array()
    outside = np.concatenate([arr[0, [1, 2]], arr[1:, [0, 3]].ravel()])
    return bool(np.all(np.abs(outside) <= tol * max(1.0, a.norm())))


# ---------------------------------------------------------------------------
# 2x2 matrix representation


def matrix_rep(a: AlgebraElement) -> HMatrix:
    """c0 1 + c_k s_k with s1 = [[0,1],[1,0]], s2 = [[0,-i],[i,0]], s3 = diag(1,-1)."""
    c0, c1, c2, c3 = a.coeffs
    ic2 = I * c2
    return HMatrix.from_entries([[c0 + c3, c1 - ic2], [c1 + ic2, c0 - c3]])


def from_matrix(m: HMatrix) -> AlgebraElement:
    if m.n != 2:
        raise ValueError("the Pauli algebra is represented by 2x2 matrices")
    m00, m01, m10, m11 = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    return AlgebraElement(
        (m00 + m11) * 0.5,
        (m10 + m01) * 0.5,
        (I * (m01 - m10)) * 0.5,
        (m00 - m11) * 0.5,
    )


def reversion_matrix(m: HMatrix) -> HMatrix:
    """Transpose plus conj_i entrywise."""
    return HMatrix(m.data.transpose(1, 0, 2) * np.array([1.0, -1.0, 1.0, -1.0]))


def conjugation_matrix(m: HMatrix) -> HMatrix:
    """Transpose plus conj_full entrywise."""
    return m.bar_transpose()


# ---------------------------------------------------------------------------
# exponential

# below this |r| the closed form switches to its Taylor series
_SERIES_CUTOFF = 1e-6


def _exp_sector(a0: complex, b: np.ndarray) -> tuple[complex, np.ndarray]:
    r2 = complex(np.sum(b * b))
    r = cmath.sqrt(r2)
    if abs(r) < _SERIES_CUTOFF:
        ch = 1 + r2 / 2 + r2 * r2 / 24
        shc = 1 + r2 / 6 + r2 * r2 / 120
    else:
        ch = cmath.cosh(r)
        shc = cmath.sinh(r) / r
    scale = cmath.exp(a0)
    return scale * ch, scale * shc * b


def exp(a: AlgebraElement) -> AlgebraElement:
    """exp(a0 + b.s) = e^a0 (cosh r + sinh(r)/r b.s), r = sqrt(b.b), per idempotent sector."""
    plus, minus = hc.split_array(a.as_array())
    s0p, vp = _exp_sector(plus[0], plus[1:])
    s0m, vm = _exp_sector(minus[0], minus[1:])
    arr = hc.join_array(np.concatenate([[s0p], vp]), np.concatenate([[s0m], vm]))
    return AlgebraElement.from_array(arr)


# ---------------------------------------------------------------------------
# array helpers; trailing axes (4, 4) hold coefficient index then (x, y, v, w)

_I_ARR = np.array([0.0, 1.0, 0.0, 0.0])


def gp_arrays(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Vectorised :func:`gp` over leading axes."""
    m = hc.mul_arrays
    a0, b0 = a[..., 0, :], b[..., 0, :]
    scalar = m(a0, b0) + sum(m(a[..., k, :], b[..., k, :]) for k in (1, 2, 3))
    out = [scalar]
    for idx, (k, l, _) in enumerate(_EPS_PAIRS):
        ak, al = a[..., k + 1, :], a[..., l + 1, :]
        bk, bl = b[..., k + 1, :], b[..., l + 1, :]
        cross = m(_I_ARR, m(ak, bl) - m(al, bk))
        out.append(m(a0, b[..., idx + 1, :]) + m(b0, a[..., idx + 1, :]) + cross)
    return np.stack(out, axis=-2)


def conjugation_arrays(a: np.ndarray) -> np.ndarray:
    return hc.conj_full_array(a)
