"""Square matrices with hyperbolic complex entries."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import hypercomplex as hc
from .hypercomplex import HNumber


class HMatrix:
    """n x n matrix over H, stored as a real array of shape (n, n, 4).

    Products use the component multiplication table directly; the idempotent
    split is only used where a complex-linear-algebra routine is needed
    (determinants, exponentials, inverses).
    """

    __slots__ = ("data",)

    def __init__(self, data) -> None:
        arr = np.array(data, dtype=float)
        if arr.ndim != 3 or arr.shape[0] != arr.shape[1] or arr.shape[2] != 4:
            raise ValueError(f"HMatrix data must have shape (n, n, 4), got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("HMatrix entries must be finite")
        arr.setflags(write=False)
        self.data = arr

    # constructors -------------------------------------------------------

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence]) -> "HMatrix":
        return cls([[HNumber.coerce(e).as_tuple() for e in row] for row in rows])

    @classmethod
    def identity(cls, n: int) -> "HMatrix":
        data = np.zeros((n, n, 4))
        data[np.arange(n), np.arange(n), 0] = 1.0
        return cls(data)

    @classmethod
    def diag(cls, entries: Iterable) -> "HMatrix":
        entries = [HNumber.coerce(e) for e in entries]
        n = len(entries)
        data = np.zeros((n, n, 4))
        for k, e in enumerate(entries):
            data[k, k] = e.as_tuple()
        return cls(data)

    @classmethod
    def from_complex(cls, m) -> "HMatrix":
        """Embed a complex matrix (unit i) into H."""
        m = np.asarray(m, dtype=complex)
        data = np.zeros(m.shape + (4,))
        data[..., 0] = m.real
        data[..., 1] = m.imag
        return cls(data)

    @classmethod
    def from_split(cls, plus, minus) -> "HMatrix":
        return cls(hc.join_array(plus, minus))

    # accessors ----------------------------------------------------------

    @property
    def n(self) -> int:
        return self.data.shape[0]

    def __getitem__(self, idx) -> HNumber:
        r, c = idx
        return HNumber.from_array(self.data[r, c])

    def rows(self) -> list[list[HNumber]]:
        return [[self[r, c] for c in range(self.n)] for r in range(self.n)]

    def split(self) -> tuple[np.ndarray, np.ndarray]:
        """The two complex matrices (M+, M-) along P+ and P-."""
        return hc.split_array(self.data)

    # algebra ------------------------------------------------------------

    def __matmul__(self, other: "HMatrix") -> "HMatrix":
        if not isinstance(other, HMatrix):
            return NotImplemented
        prod = hc.mul_arrays(self.data[:, :, None, :], other.data[None, :, :, :])
        return HMatrix(prod.sum(axis=1))

    def __add__(self, other: "HMatrix") -> "HMatrix":
        return HMatrix(self.data + other.data)

    def __sub__(self, other: "HMatrix") -> "HMatrix":
        return HMatrix(self.data - other.data)

    def __neg__(self) -> "HMatrix":
        return HMatrix(-self.data)

    def scale(self, z) -> "HMatrix":
        z = HNumber.coerce(z)
        return HMatrix(hc.mul_arrays(self.data, z.as_array()))

    def apply(self, vec: Sequence) -> list[HNumber]:
        """Matrix times a column vector of HNumbers."""
        v = np.array([HNumber.coerce(e).as_tuple() for e in vec])
        out = hc.mul_arrays(self.data, v[None, :, :]).sum(axis=1)
        return [HNumber.from_array(row) for row in out]

    def transpose(self) -> "HMatrix":
        return HMatrix(self.data.transpose(1, 0, 2))

    def bar_transpose(self) -> "HMatrix":
        """Transpose combined with conj_full on every entry."""
        return HMatrix(hc.conj_full_array(self.data.transpose(1, 0, 2)))

    def trace(self) -> HNumber:
        return HNumber.from_array(np.trace(self.data, axis1=0, axis2=1))

    def norm(self) -> float:
        return float(np.sqrt(np.sum(self.data * self.data)))

    def isclose(self, other: "HMatrix", tol: float = 1e-10) -> bool:
        scale = max(1.0, self.norm(), other.norm())
        return (self - other).norm() <= tol * scale

    def __eq__(self, other) -> bool:
        return isinstance(other, HMatrix) and np.array_equal(self.data, other.data)

    __hash__ = None

    def __repr__(self) -> str:
        return f"HMatrix(n={self.n}, data={self.data.tolist()!r})"
