"""Rotors, boosts and their action on paravectors and spinors.

A spin transform is an algebra element g with g bar(g) = 1.  Rotations are
generated by -i tau_k and boosts by j tau_k with tau_k = s_k / 2:

    rotor(n, theta) = exp(-i theta n.s / 2)
    boost(n, xi)    = exp( j xi    n.s / 2)

Paravectors transform as x -> g x g^dagger; spinors as psi -> bar(g) psi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import pauli_algebra as pa
from .errors import BadAxis
from .hypercomplex import HNumber, I, J, P_MINUS, P_PLUS, split_array
from .pauli_algebra import AlgebraElement, Paravector

AXIS_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class HSpinor:
    """Two-component spinor over H."""

    a: HNumber
    b: HNumber

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", HNumber.coerce(self.a))
        object.__setattr__(self, "b", HNumber.coerce(self.b))

    @property
    def components(self) -> tuple[HNumber, HNumber]:
        return (self.a, self.b)

    def __add__(self, other: "HSpinor") -> "HSpinor":
        return HSpinor(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "HSpinor") -> "HSpinor":
        return HSpinor(self.a - other.a, self.b - other.b)

    def scale(self, z) -> "HSpinor":
        z = HNumber.coerce(z)
        return HSpinor(z * self.a, z * self.b)

    def norm(self) -> float:
        return math.hypot(abs(self.a), abs(self.b))

    def as_array(self) -> np.ndarray:
        return np.array([self.a.as_tuple(), self.b.as_tuple()])

    @classmethod
    def from_array(cls, arr) -> "HSpinor":
        return cls(HNumber.from_array(arr[0]), HNumber.from_array(arr[1]))

    def to_json(self) -> list[dict]:
        return [self.a.to_json(), self.b.to_json()]


def spinor_product(phi: HSpinor, psi: HSpinor) -> HNumber:
    """(phi, psi) = bar(phi)_i psi^i, valued in H."""
    return phi.a.conj_full() * psi.a + phi.b.conj_full() * psi.b


def act(m: AlgebraElement, psi: HSpinor) -> HSpinor:
    """Left action of an algebra element on a spinor through its 2x2 matrix."""
    return HSpinor(*pa.matrix_rep(m).apply(psi.components))


@dataclass(frozen=True)
class SpinTransform:
    g: AlgebraElement
    params: dict = field(default_factory=dict, compare=False)

    def __matmul__(self, other: "SpinTransform") -> "SpinTransform":
        """Composition: (self @ other) applies ``other`` first."""
        return SpinTransform(pa.gp(self.g, other.g))

    def inverse(self) -> "SpinTransform":
        return SpinTransform(pa.conjugation(self.g))

    def unitarity_residual(self) -> float:
        """max(|g bar(g) - 1|, |g^dagger bar(g^dagger) - 1|)."""
        g = self.g
        gd = pa.reversion(g)
        r1 = (pa.gp(g, pa.conjugation(g)) - pa.IDENTITY).norm()
        r2 = (pa.gp(gd, pa.conjugation(gd)) - pa.IDENTITY).norm()
        return max(r1, r2)


IDENTITY = SpinTransform(pa.IDENTITY)


def _unit(axis: Sequence[float]) -> np.ndarray:
    n = np.asarray(axis, dtype=float)
    if n.shape != (3,) or not np.all(np.isfinite(n)):
        raise BadAxis(f"axis must be a finite 3-vector, got {axis!r}")
    if abs(float(np.linalg.norm(n)) - 1.0) > AXIS_TOL:
        raise BadAxis(f"axis {axis!r} is not a unit vector")
    return n


def _n_dot_sigma(n: np.ndarray, unit: HNumber, half_param: float) -> AlgebraElement:
    return AlgebraElement(HNumber(), *(unit * (half_param * float(nk)) for nk in n))


def rotor(axis: Sequence[float], theta: float) -> SpinTransform:
    """exp(-i theta n.s / 2); maps e1 -> cos(theta) e1 + sin(theta) e2 for n = z."""
    n = _unit(axis)
    g = pa.exp(_n_dot_sigma(n, -I, 0.5 * theta))
    return SpinTransform(g, {"kind": "rotor", "axis": n.tolist(), "param": float(theta)})


def boost(direction: Sequence[float], rapidity: float) -> SpinTransform:
    """exp(j xi n.s / 2); maps e0 -> cosh(xi) e0 + sinh(xi) n.e."""
    n = _unit(direction)
    g = pa.exp(_n_dot_sigma(n, J, 0.5 * rapidity))
    return SpinTransform(g, {"kind": "boost", "axis": n.tolist(), "param": float(rapidity)})


def from_json(obj) -> SpinTransform:
    """Build a transform from ``{"kind", "axis", "param"}`` or a raw AlgebraElement list."""
    if isinstance(obj, list):
        return SpinTransform(AlgebraElement.from_json(obj))
    kind = obj.get("kind")
    if kind == "rotor":
        return rotor(obj["axis"], obj["param"])
    if kind == "boost":
        return boost(obj["axis"], obj["param"])
    raise ValueError(f"unknown transform kind {kind!r}")


def apply_element(g: SpinTransform, x: AlgebraElement) -> AlgebraElement:
    return pa.gp(pa.gp(g.g, x), pa.reversion(g.g))


def apply(g: SpinTransform, x: Paravector, tol: float = 1e-11) -> Paravector:
    """x' = g x g^dagger, checked to still be a paravector."""
    return pa.to_paravector(apply_element(g, x.to_element()), tol=tol)


def apply_spinor(g: SpinTransform, psi: HSpinor) -> HSpinor:
    """psi' = bar(g) psi.

    Conjugation reverses products, so this is a right action:
    ``apply_spinor(g @ h, psi) == apply_spinor(h, apply_spinor(g, psi))``.
    """
    return act(pa.conjugation(g.g), psi)


def to_complex_pair(g: SpinTransform | AlgebraElement) -> tuple[np.ndarray, np.ndarray]:
    """Complex 2x2 matrices of g along P+ (first) and P- (second)."""
    elem = g.g if isinstance(g, SpinTransform) else g
    return pa.matrix_rep(elem).split()


def chirality_projectors() -> tuple[AlgebraElement, AlgebraElement]:
    """(1 + j)/2 and (1 - j)/2 as algebra elements."""
    return AlgebraElement(P_PLUS), AlgebraElement(P_MINUS)


def chiral_split(psi: HSpinor) -> tuple[np.ndarray, np.ndarray]:
    """Complex 2-vectors carried by the P+ and P- sectors of ``psi``."""
    return split_array(psi.as_array())
