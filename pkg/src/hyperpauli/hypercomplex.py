"""Hyperbolic complex numbers z = x + i y + j v + ij w.

The ring H is commutative with i**2 = -1, j**2 = +1 and (ij)**2 = -1.  It
contains zero divisors: (1 + j)(1 - j) = 0.  Through the idempotents
P+ = (1 + j)/2 and P- = (1 - j)/2 every z splits as

    z = z+ P+ + z- P-,      z+ = (x + v) + i (y + w),   z- = (x - v) + i (y - w)

which is a ring isomorphism H -> C + C.  Exponentials, inverses and
determinants are computed through this split.

Besides the scalar class :class:`HNumber`, vectorised helpers operate on
real arrays whose last axis holds the components ``(x, y, v, w)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from numbers import Complex, Real
from typing import Any

import numpy as np

from .errors import NotInvertible

#: relative guard band used to decide that an idempotent component vanishes
ZERO_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class HNumber:
    """Element of H stored as real coefficients of (1, i, j, ij)."""

    x: float = 0.0
    y: float = 0.0
    v: float = 0.0
    w: float = 0.0

    def __post_init__(self) -> None:
        for name in ("x", "y", "v", "w"):
            val = float(getattr(self, name))
            if not math.isfinite(val):
                raise ValueError(f"HNumber component {name} is not finite: {val!r}")
            object.__setattr__(self, name, val)

    # construction -----------------------------------------------------

    @classmethod
    def coerce(cls, value: Any) -> "HNumber":
        """Promote reals and Python complex numbers (unit i) to HNumber."""
        if isinstance(value, HNumber):
            return value
        if isinstance(value, Real):
            return cls(float(value))
        if isinstance(value, Complex):
            return cls(value.real, value.imag)
        raise TypeError(f"cannot convert {type(value).__name__} to HNumber")

    @classmethod
    def from_array(cls, arr) -> "HNumber":
        x, y, v, w = (float(c) for c in arr)
        return cls(x, y, v, w)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.x, self.y, self.v, self.w)

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple())

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        try:
            o = HNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return HNumber(self.x + o.x, self.y + o.y, self.v + o.v, self.w + o.w)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = HNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return HNumber(self.x - o.x, self.y - o.y, self.v - o.v, self.w - o.w)

    def __rsub__(self, other):
        try:
            o = HNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __neg__(self) -> "HNumber":
        return HNumber(-self.x, -self.y, -self.v, -self.w)

    def __pos__(self) -> "HNumber":
        return self

    def __mul__(self, other):
        try:
            o = HNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Real):
            d = float(other)
            return HNumber(self.x / d, self.y / d, self.v / d, self.w / d)
        try:
            o = HNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return mul(self, invert(o))

    def __rtruediv__(self, other):
        try:
            o = HNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return mul(o, invert(self))

    def __abs__(self) -> float:
        """Euclidean norm of the four real components (used for tolerances only)."""
        return math.sqrt(self.x * self.x + self.y * self.y + self.v * self.v + self.w * self.w)

    # involutions ------------------------------------------------------

    def conj_full(self) -> "HNumber":
        return conj_full(self)

    def conj_i(self) -> "HNumber":
        return conj_i(self)

    def conj_j(self) -> "HNumber":
        return conj_j(self)

    # misc -------------------------------------------------------------

    def isclose(self, other, tol: float = 1e-10) -> bool:
        """Relative closeness ``|a - b| <= tol * max(1, |a|, |b|)``."""
        o = HNumber.coerce(other)
        scale = max(1.0, abs(self), abs(o))
        return abs(self - o) <= tol * scale

    def is_real(self, tol: float = 0.0) -> bool:
        return max(abs(self.y), abs(self.v), abs(self.w)) <= tol

    def to_json(self) -> dict:
        return {"x": self.x, "y": self.y, "v": self.v, "w": self.w}

    @classmethod
    def from_json(cls, obj: dict) -> "HNumber":
        return cls(obj.get("x", 0.0), obj.get("y", 0.0), obj.get("v", 0.0), obj.get("w", 0.0))

    def __repr__(self) -> str:
        return f"HNumber({self.x!r}, {self.y!r}, {self.v!r}, {self.w!r})"

    def __str__(self) -> str:
        return f"({self.x:+.6g} {self.y:+.6g}i {self.v:+.6g}j {self.w:+.6g}ij)"


@dataclass(frozen=True, slots=True)
class SplitPair:
    """Components of z along the idempotents P+ = (1+j)/2 and P- = (1-j)/2."""

    plus: complex
    minus: complex

    def __mul__(self, other: "SplitPair") -> "SplitPair":
        return SplitPair(self.plus * other.plus, self.minus * other.minus)


ZERO = HNumber()
ONE = HNumber(1.0)
I = HNumber(0.0, 1.0)
J = HNumber(0.0, 0.0, 1.0)
IJ = HNumber(0.0, 0.0, 0.0, 1.0)
P_PLUS = HNumber(0.5, 0.0, 0.5)
P_MINUS = HNumber(0.5, 0.0, -0.5)


def mul(a: HNumber, b: HNumber) -> HNumber:
    """Ring product from the basis table of (1, i, j, ij)."""
    return HNumber(
        a.x * b.x - a.y * b.y + a.v * b.v - a.w * b.w,
        a.x * b.y + a.y * b.x + a.v * b.w + a.w * b.v,
        a.x * b.v + a.v * b.x - a.y * b.w - a.w * b.y,
        a.x * b.w + a.w * b.x + a.y * b.v + a.v * b.y,
    )


def conj_full(z: HNumber) -> HNumber:
    """Flip the signs of both i and j (ij is left unchanged)."""
    return HNumber(z.x, -z.y, -z.v, z.w)


def conj_i(z: HNumber) -> HNumber:
    """Flip the sign of i only."""
    return HNumber(z.x, -z.y, z.v, -z.w)


def conj_j(z: HNumber) -> HNumber:
    """Flip the sign of j only."""
    return HNumber(z.x, z.y, -z.v, -z.w)


def split(z: HNumber) -> SplitPair:
    a = complex(z.x, z.y)
    b = complex(z.v, z.w)
    return SplitPair(a + b, a - b)


def join(p: SplitPair) -> HNumber:
    a = (p.plus + p.minus) / 2
    b = (p.plus - p.minus) / 2
    return HNumber(a.real, a.imag, b.real, b.imag)


def exp(z: HNumber) -> HNumber:
    s = split(z)
    return join(SplitPair(cmath.exp(s.plus), cmath.exp(s.minus)))


def is_invertible(z: HNumber, tol: float = ZERO_TOL) -> bool:
    s = split(z)
    guard = tol * (1.0 + abs(z))
    return abs(s.plus) >= guard and abs(s.minus) >= guard


def invert(z: HNumber, tol: float = ZERO_TOL) -> HNumber:
    """Multiplicative inverse; raises :class:`NotInvertible` on (near) zero divisors."""
    if not is_invertible(z, tol):
        raise NotInvertible(f"{z!r} has a vanishing idempotent component")
    s = split(z)
    return join(SplitPair(1 / s.plus, 1 / s.minus))


def sqrt(z: HNumber) -> HNumber:
    """Principal square root taken separately in each idempotent sector."""
    s = split(z)
    return join(SplitPair(cmath.sqrt(s.plus), cmath.sqrt(s.minus)))


# ---------------------------------------------------------------------------
# array helpers; last axis holds (x, y, v, w)


def mul_arrays(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    ax, ay, av, aw = np.moveaxis(a, -1, 0)
    bx, by, bv, bw = np.moveaxis(b, -1, 0)
    return np.stack(
        [
            ax * bx - ay * by + av * bv - aw * bw,
            ax * by + ay * bx + av * bw + aw * bv,
            ax * bv + av * bx - ay * bw - aw * by,
            ax * bw + aw * bx + ay * bv + av * by,
        ],
        axis=-1,
    )


def conj_full_array(a: np.ndarray) -> np.ndarray:
    return np.asarray(a, dtype=float) * np.array([1.0, -1.0, -1.0, 1.0])


def split_array(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(a, dtype=float)
    lo = a[..., 0] + 1j * a[..., 1]
    hi = a[..., 2] + 1j * a[..., 3]
    return lo + hi, lo - hi


def join_array(plus: np.ndarray, minus: np.ndarray) -> np.ndarray:
    lo = (np.asarray(plus) + np.asarray(minus)) / 2
    hi = (np.asarray(plus) - np.asarray(minus)) / 2
    return np.stack([lo.real, lo.imag, hi.real, hi.imag], axis=-1)
