"""Mass operator M^2 = p pbar on plane waves and periodic lattices.

Conventions: metric (+,-,-,-), plane waves u exp(-i p.x), momentum
operator p = i d^mu e_mu.  With these, M^2 acting on a free field is the
scalar -box, and M^2 psi = m^2 psi is the Klein-Gordon equation.

Lattice fields are stored as real arrays: spinor fields with trailing shape
(2, 4), algebra-valued fields with trailing shape (4, 4); the last axis is
always the HNumber component (x, y, v, w).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Sequence

import numpy as np

from . import hypercomplex as hc
from . import pauli_algebra as pa
from .errors import GridMismatch, IncommensurateWave, SizeMismatch
from .hmatrix import HMatrix
from .hypercomplex import HNumber, IJ
from .pauli_algebra import AlgebraElement, Paravector
from .spin_group import HSpinor, act, spinor_product

COMMENSURATE_TOL = 1e-9
# momenta are matched to fractions with at most this denominator
MAX_DENOMINATOR = 1000
MIN_SITES = 4

# lattice axis -> spacetime index, by lattice dimension
AXES = {2: (0, 3), 4: (0, 1, 2, 3)}


def momentum_element(p: Paravector) -> AlgebraElement:
    return p.to_element()


def metric_diagonal() -> np.ndarray:
    """eta_mu_mu read off the algebra, checking e_mu bar(e_nu) + e_nu bar(e_mu) = 0 for mu != nu."""
    eta = np.zeros(4)
    for mu in range(4):
        eta[mu] = pa.gp(pa.E[mu], pa.conjugation(pa.E[mu])).c0.x
        for nu in range(mu + 1, 4):
            sym = pa.gp(pa.E[mu], pa.conjugation(pa.E[nu])) + pa.gp(pa.E[nu], pa.conjugation(pa.E[mu]))
            assert sym.norm() == 0.0
    return eta


_ETA = metric_diagonal()


def minkowski_square(p: Paravector) -> float:
    return pa.minkowski(p, p)


# ---------------------------------------------------------------------------
# plane waves


@dataclass(frozen=True)
class PlaneWaveSpinor:
    """psi(x) = u exp(-i p.x)."""

    u: HSpinor
    p: Paravector

    def phase(self, x: Paravector) -> HNumber:
        theta = pa.minkowski(self.p, x)
        return HNumber(math.cos(theta), -math.sin(theta))

    def evaluate(self, x: Paravector) -> HSpinor:
        return self.u.scale(self.phase(x))


@dataclass(frozen=True)
class PlaneWaveGauge:
    """A(x) = eps exp(-i k.x), plus its complex conjugate when ``real_part`` is set."""

    eps: Paravector
    k: Paravector
    real_part: bool = False

    def evaluate(self, x: Paravector) -> AlgebraElement:
        theta = pa.minkowski(self.k, x)
        val = self.eps.to_element() * HNumber(math.cos(theta), -math.sin(theta))
        if self.real_part:
            # complex conjugate: flip i on every coefficient
            val = val + AlgebraElement(*(hc.conj_i(c) for c in val.coeffs))
        return val


def mass_operator_on_planewave(p: Paravector, A: Paravector | None = None) -> AlgebraElement:
    """(p + A) bar(p + A) as an algebra element; the scalar (p.p) 1 when A is None."""
    P = p.to_element()
    if A is not None:
        P = P + A.to_element()
    return pa.gp(P, pa.conjugation(P))


def kg_residual_planewave(psi: PlaneWaveSpinor, m: float) -> HSpinor:
    """Amplitude of (M^2 - m^2) psi, i.e. ((p.p) - m^2) u."""
    op = mass_operator_on_planewave(psi.p) - m * m
    return act(op, psi.u)


def minimal_substitution(psi: PlaneWaveSpinor, A: Paravector, m: float) -> HSpinor:
    """Amplitude of ((p + A) bar(p + A) - m^2) psi for a constant potential A."""
    op = mass_operator_on_planewave(psi.p, A) - m * m
    return act(op, psi.u)


def maxwell_amplitude(A: PlaneWaveGauge) -> AlgebraElement:
    """Amplitude of M^2 A = (k.k) eps."""
    return pa.gp(mass_operator_on_planewave(A.k), A.eps.to_element())


def maxwell_residual(A: PlaneWaveGauge) -> float:
    """|M^2 A| = |k.k| |eps|, vanishing exactly for null k."""
    return maxwell_amplitude(A).norm()


# ---------------------------------------------------------------------------
# lattice


def _rational(x: float) -> Fraction:
    f = Fraction(x).limit_denominator(MAX_DENOMINATOR)
    if abs(float(f) - x) > COMMENSURATE_TOL * max(1.0, abs(x)):
        raise IncommensurateWave(f"momentum component {x!r} is not a rational multiple of the others")
    return f


def commensurate_box(p: Paravector, ndim: int = 2) -> float:
    """Smallest side L of a cubic periodic box holding whole periods of exp(-i p.x)."""
    comps = [abs(p.as_tuple()[mu]) for mu in AXES[ndim]]
    _check_in_plane(p, ndim)
    nonzero = [c for c in comps if c > 0.0]
    if not nonzero:
        return 2 * math.pi
    # L = 2 pi T with T |q| integer for every component; T is the LCM of 1/|q|
    inv = [1 / _rational(c) for c in nonzero]
    num = reduce(math.lcm, (f.numerator for f in inv))
    den = reduce(math.gcd, (f.denominator for f in inv))
    return 2 * math.pi * num / den


def _check_in_plane(p: Paravector, ndim: int) -> None:
    if ndim not in AXES:
        raise ValueError("lattices are 2-dimensional (t, z) or 4-dimensional")
    missing = set(range(4)) - set(AXES[ndim])
    if any(p.as_tuple()[mu] != 0.0 for mu in missing):
        raise IncommensurateWave("momentum has components along axes the lattice does not resolve")


@dataclass
class LatticeField:
    """Periodic field on a rectangular grid with spacing ``h`` on every axis."""

    dims: tuple[int, ...]
    h: float
    values: np.ndarray
    kind: str = field(default="spinor")

    def __post_init__(self) -> None:
        self.dims = tuple(int(n) for n in self.dims)
        if len(self.dims) not in AXES:
            raise ValueError("lattices are 2-dimensional (t, z) or 4-dimensional")
        if min(self.dims) < MIN_SITES:
            raise ValueError(f"every axis needs at least {MIN_SITES} sites")
        tail = {"spinor": (2, 4), "algebra": (4, 4)}[self.kind]
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != self.dims + tail:
            raise ValueError(f"values must have shape {self.dims + tail}, got {self.values.shape}")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("lattice values must be finite")

    @property
    def ndim(self) -> int:
        return len(self.dims)

    @property
    def volume(self) -> float:
        return float(np.prod(self.dims)) * self.h**self.ndim

    def norm(self) -> float:
        return float(np.sqrt(np.sum(self.values**2)))

    def like(self, values: np.ndarray) -> "LatticeField":
        return LatticeField(self.dims, self.h, values, self.kind)

    def coordinates(self) -> np.ndarray:
        """Spacetime coordinates x^mu of every site, shape dims + (4,)."""
        grids = np.meshgrid(*(np.arange(n) * self.h for n in self.dims), indexing="ij")
        x = np.zeros(self.dims + (4,))
        for axis, mu in enumerate(AXES[self.ndim]):
            x[..., mu] = grids[axis]
        return x

    def check_commensurate(self, p: Paravector) -> None:
        _check_in_plane(p, self.ndim)
        for axis, mu in enumerate(AXES[self.ndim]):
            periods = abs(p.as_tuple()[mu]) * self.dims[axis] * self.h / (2 * math.pi)
            if abs(periods - round(periods)) > COMMENSURATE_TOL * max(1.0, periods):
                raise IncommensurateWave(
                    f"axis {axis} holds {periods:.6g} periods; the box must hold a whole number"
                )

    def _phases(self, p: Paravector) -> np.ndarray:
        eta_p = p.as_array() * _ETA
        theta = self.coordinates() @ eta_p
        out = np.zeros(theta.shape + (4,))
        out[..., 0] = np.cos(theta)
        out[..., 1] = -np.sin(theta)
        return out

    @classmethod
    def from_planewave_spinor(cls, psi: PlaneWaveSpinor, dims: Sequence[int], h: float) -> "LatticeField":
        blank = cls(tuple(dims), h, np.zeros(tuple(dims) + (2, 4)), "spinor")
        blank.check_commensurate(psi.p)
        ph = blank._phases(psi.p)[..., None, :]
        return blank.like(hc.mul_arrays(psi.u.as_array(), ph))

    @classmethod
    def from_planewave_gauge(cls, A: PlaneWaveGauge, dims: Sequence[int], h: float) -> "LatticeField":
        blank = cls(tuple(dims), h, np.zeros(tuple(dims) + (4, 4)), "algebra")
        blank.check_commensurate(A.k)
        ph = blank._phases(A.k)[..., None, :]
        vals = hc.mul_arrays(A.eps.to_element().as_array(), ph)
        if A.real_part:
            vals = vals + vals * np.array([1.0, -1.0, 1.0, -1.0])
        return blank.like(vals)

    @classmethod
    def zeros_like(cls, other: "LatticeField", kind: str) -> "LatticeField":
        tail = {"spinor": (2, 4), "algebra": (4, 4)}[kind]
        return cls(other.dims, other.h, np.zeros(other.dims + tail), kind)


def _second_difference(vals: np.ndarray, axis: int, h: float, method: str) -> np.ndarray:
    if method == "central":
        return (np.roll(vals, -1, axis) - 2.0 * vals + np.roll(vals, 1, axis)) / (h * h)
    if method == "spectral":
        n = vals.shape[axis]
        q = 2 * np.pi * np.fft.fftfreq(n, d=h)
        shape = [1] * vals.ndim
        shape[axis] = n
        spectrum = np.fft.fft(vals, axis=axis) * (-(q**2)).reshape(shape)
        return np.fft.ifft(spectrum, axis=axis).real
    raise ValueError(f"unknown derivative method {method!r}")


def apply_mass_operator(f: LatticeField, method: str = "central") -> LatticeField:
    """M^2 = -sum_mu eta_mu_mu d_mu^2 with the metric read from the algebra.

    ``central`` uses 3-point second differences (error O(h^2));
    ``spectral`` differentiates in Fourier space and is exact for
    commensurate plane waves.
    """
    out = np.zeros_like(f.values)
    for axis, mu in enumerate(AXES[f.ndim]):
        out -= _ETA[mu] * _second_difference(f.values, axis, f.h, method)
    return f.like(out)


def kg_residual_lattice(f: LatticeField, m: float, method: str = "central") -> float:
    """|(M^2_h - m^2) psi_h| / |psi_h|."""
    res = apply_mass_operator(f, method).values - (m * m) * f.values
    norm = f.norm()
    if norm == 0.0:
        return 0.0
    return float(np.sqrt(np.sum(res * res)) / norm)


def current_from_field(A, method: str = "central"):
    """Source J = -M^2 A, analytically for a plane wave or by stencil on a lattice."""
    if isinstance(A, PlaneWaveGauge):
        amp = -maxwell_amplitude(A)
        return PlaneWaveGauge(pa.to_paravector(amp), A.k, A.real_part)
    if isinstance(A, LatticeField):
        return A.like(-apply_mass_operator(A, method).values)
    raise TypeError("expected a PlaneWaveGauge or a LatticeField")


@dataclass(frozen=True)
class KGLevel:
    n: int
    h: float
    residual: float
    order: float | None


def kg_convergence(
    p: Paravector,
    m: float,
    grid: Sequence[int] = (32, 32),
    refinements: int = 3,
    h: float | None = None,
    u: HSpinor | None = None,
    method: str = "central",
) -> list[KGLevel]:
    """Residuals on successively halved spacings, with observed orders log2(r(h)/r(h/2)).

    The box is fixed across refinements.  Without ``h`` it is the smallest
    commensurate cube for ``p``; with ``h`` it is ``grid * h`` and must hold
    whole periods.
    """
    if refinements < 1:
        raise ValueError("refinements must be >= 1")
    grid = tuple(int(n) for n in grid)
    if u is None:
        u = HSpinor(HNumber(1.0), HNumber(0.0, 0.5, 0.25))
    if h is None:
        if len(set(grid)) != 1:
            raise ValueError("an automatic box needs equal grid sizes on every axis")
        h = commensurate_box(p, len(grid)) / grid[0]
    wave = PlaneWaveSpinor(u, p)
    levels: list[KGLevel] = []
    for level in range(refinements):
        scale = 2**level
        dims = tuple(n * scale for n in grid)
        hh = h / scale
        f = LatticeField.from_planewave_spinor(wave, dims, hh)
        r = kg_residual_lattice(f, m, method)
        order = None
        if levels and r > 0.0 and levels[-1].residual > 0.0:
            order = math.log2(levels[-1].residual / r)
        levels.append(KGLevel(dims[0], hh, r, order))
    return levels


# ---------------------------------------------------------------------------
# action


@dataclass(frozen=True)
class ActionValue:
    gauge: HNumber
    spinor: HNumber

    @property
    def total(self) -> HNumber:
        return self.gauge + self.spinor

    def to_json(self) -> dict:
        return {"gauge": self.gauge.to_json(), "spinor": self.spinor.to_json(), "total": self.total.to_json()}


def _sum_sites(density: np.ndarray) -> np.ndarray:
    # np.sum on a contiguous float array reduces pairwise, so the result does not depend on threading
    flat = np.ascontiguousarray(density.reshape((-1, 4)))
    return flat.sum(axis=0)


def gauge_density(A: LatticeField, method: str = "central") -> np.ndarray:
    """1/2 tr(bar(A) M^2 A) per site."""
    MA = apply_mass_operator(A, method).values
    prod = pa.gp_arrays(pa.conjugation_arrays(A.values), MA)
    return prod[..., 0, :]


def spinor_density(psi: LatticeField, m: float, method: str = "central") -> np.ndarray:
    """bar(psi) (M^2 - m^2) psi per site."""
    R = apply_mass_operator(psi, method).values - (m * m) * psi.values
    terms = hc.mul_arrays(hc.conj_full_array(psi.values), R)
    return terms.sum(axis=-2)


def action(
    A: LatticeField | None,
    psi: LatticeField | None,
    m: float,
    method: str = "central",
) -> ActionValue:
    """S = sum_sites h^D [ 1/2 tr(bar(A) M^2 A) + bar(psi) (M^2 - m^2) psi ].

    Either field may be ``None`` and then contributes zero.
    """
    if A is None and psi is None:
        raise ValueError("at least one field is required")
    if A is not None and psi is not None and (A.dims != psi.dims or A.h != psi.h):
        raise GridMismatch(f"gauge grid {A.dims}/{A.h} differs from spinor grid {psi.dims}/{psi.h}")
    if A is not None and A.kind != "algebra":
        raise ValueError("the gauge field must be algebra valued")
    if psi is not None and psi.kind != "spinor":
        raise ValueError("the matter field must be spinor valued")
    ref = A if A is not None else psi
    cell = ref.h**ref.ndim
    gauge = HNumber()
    spinor = HNumber()
    if A is not None:
        gauge = HNumber.from_array(_sum_sites(gauge_density(A, method)) * cell)
    if psi is not None:
        spinor = HNumber.from_array(_sum_sites(spinor_density(psi, m, method)) * cell)
    return ActionValue(gauge, spinor)


def lattice_dispersion(p: Paravector, h: float, ndim: int = 2) -> float:
    """Eigenvalue of the central-difference M^2 on exp(-i p.x): sum_mu eta_mu (2/h sin(p_mu h/2))^2."""
    total = 0.0
    for mu in AXES[ndim]:
        total += _ETA[mu] * (2.0 / h * math.sin(p.as_tuple()[mu] * h / 2.0)) ** 2
    return total


# ---------------------------------------------------------------------------
# Yang-Mills structure


@dataclass(frozen=True)
class YangMillsField:
    """A = sum_a (G^a + ij H^a) tau_a with paravector-valued G^a, H^a."""

    G: tuple[Paravector, ...]
    H: tuple[Paravector, ...]
    taus: tuple[np.ndarray, ...]

    @property
    def n(self) -> int:
        return self.taus[0].shape[0]

    def coefficient(self, a: int) -> AlgebraElement:
        return self.G[a].to_element() + IJ * self.H[a].to_element()

    def matrix(self) -> list[list[AlgebraElement]]:
        n = self.n
        out = [[AlgebraElement() for _ in range(n)] for _ in range(n)]
        for a, tau in enumerate(self.taus):
            coeff = self.coefficient(a)
            for r in range(n):
                for c in range(n):
                    t = complex(tau[r, c])
                    if t != 0:
                        out[r][c] = out[r][c] + coeff * HNumber.coerce(t)
        return out


def assemble_ym(G: Sequence[Paravector], H: Sequence[Paravector], taus: Sequence[np.ndarray]) -> YangMillsField:
    taus = tuple(np.asarray(t, dtype=complex) for t in taus)
    if not taus:
        raise SizeMismatch("at least one generator is required")
    if len(G) != len(taus) or len(H) != len(taus):
        raise SizeMismatch(f"{len(G)} G and {len(H)} H components for {len(taus)} generators")
    return YangMillsField(tuple(G), tuple(H), taus)


def _bar_matrix(P: list[list[AlgebraElement]]) -> list[list[AlgebraElement]]:
    n = len(P)
    return [[pa.conjugation(P[c][r]) for c in range(n)] for r in range(n)]


def _matmul_elems(X, Y) -> list[list[AlgebraElement]]:
    n = len(X)
    out = []
    for r in range(n):
        row = []
        for c in range(n):
            acc = AlgebraElement()
            for k in range(n):
                acc = acc + pa.gp(X[r][k], Y[k][c])
            row.append(acc)
        out.append(row)
    return out


def ym_mass_operator(p: Paravector, ym: YangMillsField) -> list[list[AlgebraElement]]:
    """(p + A) bar(p + A) with bar acting as transpose plus algebra conjugation."""
    A = ym.matrix()
    pe = p.to_element()
    P = [[A[r][c] + (pe if r == c else 0.0) for c in range(ym.n)] for r in range(ym.n)]
    return _matmul_elems(P, _bar_matrix(P))


def ym_bilinear(psi: Sequence[HSpinor], M2: list[list[AlgebraElement]], m: float) -> HNumber:
    """bar(psi) (M^2 - m^2) psi summed over internal and spinor indices."""
    n = len(M2)
    if len(psi) != n:
        raise SizeMismatch("spinor multiplet size differs from the operator size")
    total = HNumber()
    for r in range(n):
        for c in range(n):
            op = M2[r][c] - (m * m if r == c else 0.0)
            total = total + spinor_product(psi[r], act(op, psi[c]))
    return total


def ym_gauge_transform(ym: YangMillsField, g: HMatrix) -> YangMillsField:
    """Global transform A -> bar(g)^T A g, re-expanded in the generator basis."""
    gb = g.bar_transpose()
    A = ym.matrix()
    n = ym.n
    Ap = []
    for r in range(n):
        row = []
        for c in range(n):
            acc = AlgebraElement()
            for k in range(n):
                for l in range(n):
                    acc = acc + A[k][l] * (gb[r, k] * g[l, c])
            row.append(acc)
        Ap.append(row)
    # project on tau_a through the Gram matrix tr(tau_a tau_b)
    gram = np.array([[np.trace(ta @ tb).real for tb in ym.taus] for ta in ym.taus])
    gram_inv = np.linalg.inv(gram)
    proj = []
    for tb in ym.taus:
        acc = AlgebraElement()
        for r in range(n):
            for c in range(n):
                t = complex(tb[c, r])
                if t != 0:
                    acc = acc + Ap[r][c] * HNumber.coerce(t)
        proj.append(acc.as_array())
    coeffs = np.einsum("ab,bij->aij", gram_inv, np.array(proj))
    G, H = [], []
    for arr in coeffs:
        # c0 = g0 + ij h0, c_k = j g_k + i h_k
        G.append(Paravector(arr[0, 0], arr[1, 2], arr[2, 2], arr[3, 2]))
        H.append(Paravector(arr[0, 3], arr[1, 1], arr[2, 1], arr[3, 1]))
    return YangMillsField(tuple(G), tuple(H), ym.taus)


def transform_multiplet(psi: Sequence[HSpinor], g: HMatrix) -> list[HSpinor]:
    """psi -> bar(g)^T psi, the partner of A -> bar(g)^T A g."""
    gb = g.bar_transpose()
    n = g.n
    out = []
    for r in range(n):
        acc = HSpinor(HNumber(), HNumber())
        for c in range(n):
            acc = acc + psi[c].scale(gb[r, c])
        out.append(acc)
    return out
