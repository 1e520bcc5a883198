"""Hyperbolic unitary groups U(n,H) and SU(n,H).

U(n,H) = {g : g bar(g)^T = 1}.  Elements are generated as

    g = exp(-i phi^a tau_a + j xi^a tau_a)

with Hermitian tau_a.  Along P+ and P- the group becomes two copies of
GL(n,C) glued by g- = (g+^dagger)^-1, which is why determinants and
exponentials are evaluated in the split picture.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.linalg import expm

from . import hypercomplex as hc
from .errors import NotHermitian
from .hmatrix import HMatrix
from .hypercomplex import HNumber, IJ

HERMITIAN_TOL = 1e-12
RANK_RTOL = 1e-9


def bar_transpose(m: HMatrix) -> HMatrix:
    return m.bar_transpose()


def unitarity_residual(m: HMatrix) -> float:
    return (m @ m.bar_transpose() - HMatrix.identity(m.n)).norm()


def is_unitary_H(m: HMatrix, tol: float = 1e-10) -> bool:
    return unitarity_residual(m) <= tol


def det_H(m: HMatrix) -> HNumber:
    """Determinant over H: complex determinants of both idempotent components."""
    plus, minus = m.split()
    return hc.join(hc.SplitPair(complex(np.linalg.det(plus)), complex(np.linalg.det(minus))))


def is_special_unitary_H(m: HMatrix, tol: float = 1e-10) -> bool:
    return is_unitary_H(m, tol) and abs(det_H(m) - 1.0) <= tol


# ---------------------------------------------------------------------------
# generators


def gell_mann_basis(n: int) -> list[np.ndarray]:
    """Generalised Gell-Mann matrices divided by 2 (tr(t_a t_b) = delta_ab / 2)."""
    basis = []
    for k in range(n):
        for l in range(k + 1, n):
            sym = np.zeros((n, n), dtype=complex)
            sym[k, l] = sym[l, k] = 0.5
            anti = np.zeros((n, n), dtype=complex)
            anti[k, l] = -0.5j
            anti[l, k] = 0.5j
            basis.extend([sym, anti])
    for d in range(1, n):
        diag = np.zeros(n)
        diag[:d] = 1.0
        diag[d] = -d
        basis.append(np.diag(diag * 0.5 / np.sqrt(d * (d + 1) / 2)).astype(complex))
    return basis


def unitary_basis(n: int, special: bool) -> list[np.ndarray]:
    """Generator basis of SU(n,H), plus the unit matrix for U(n,H)."""
    basis = gell_mann_basis(n)
    if not special:
        basis.append(np.eye(n, dtype=complex))
    return basis


def _check_hermitian(taus: Sequence[np.ndarray]) -> list[np.ndarray]:
    out = []
    for a, t in enumerate(taus):
        t = np.atleast_2d(np.asarray(t, dtype=complex))
        if t.shape[0] != t.shape[1]:
            raise NotHermitian(f"generator {a} is not square")
        if np.max(np.abs(t - t.conj().T), initial=0.0) > HERMITIAN_TOL * max(1.0, np.abs(t).max()):
            raise NotHermitian(f"generator {a} is not Hermitian")
        out.append(t)
    return out


def generate(taus: Sequence[np.ndarray], phi: Sequence[float], xi: Sequence[float]) -> HMatrix:
    """g = exp(-i phi.tau + j xi.tau), exponentiated in each idempotent sector."""
    taus = _check_hermitian(taus)
    if len(phi) != len(taus) or len(xi) != len(taus):
        raise ValueError("parameter count must match the generator count")
    n = taus[0].shape[0]
    rot = sum((p * t for p, t in zip(phi, taus)), np.zeros((n, n), dtype=complex))
    bst = sum((x * t for x, t in zip(xi, taus)), np.zeros((n, n), dtype=complex))
    # j -> +1 on P+, -1 on P-
    return HMatrix.from_split(expm(-1j * rot + bst), expm(-1j * rot - bst))


def generator_matrices(tau: np.ndarray) -> tuple[HMatrix, HMatrix]:
    """The two real tangent directions -i tau and j tau as H matrices."""
    tau = np.asarray(tau, dtype=complex)
    rot = HMatrix.from_complex(-1j * tau)
    data = np.zeros(tau.shape + (4,))
    data[..., 2] = tau.real
    data[..., 3] = tau.imag
    return rot, HMatrix(data)


@dataclass(frozen=True)
class LieAudit:
    n: int
    special: bool
    generator_count: int
    real_tangent_dim: int
    numerical_rank: int
    tangent_residual: float

    @property
    def consistent(self) -> bool:
        return self.numerical_rank == self.real_tangent_dim


def lie_dimension_audit(n: int, special: bool = True) -> LieAudit:
    """Count generators and confirm the real tangent dimension numerically.

    Every direction -i tau_a and j tau_a must be bar-anti-Hermitian
    (X + bar(X)^T = 0); the rank of their span is measured by SVD.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    basis = unitary_basis(n, special)
    vecs = []
    resid = 0.0
    for tau in basis:
        for x in generator_matrices(tau):
            resid = max(resid, (x + x.bar_transpose()).norm())
            vecs.append(x.data.ravel())
    count = n * n - 1 if special else n * n
    if vecs:
        sv = np.linalg.svd(np.array(vecs), compute_uv=False)
        rank = int(np.sum(sv > RANK_RTOL * sv[0])) if sv[0] > 0 else 0
    else:
        rank = 0
    return LieAudit(n, special, count, 2 * count, rank, resid)


def random_element(n: int, special: bool, rng: np.random.Generator, scale: float = 1.0) -> HMatrix:
    basis = unitary_basis(n, special)
    if not basis:
        return HMatrix.identity(n)
    phi = rng.uniform(-np.pi, np.pi, len(basis)) * scale
    xi = rng.uniform(-1.0, 1.0, len(basis)) * scale
    return generate(basis, phi, xi)


def group_audit(n: int, special: bool, seed: int = 0, trials: int = 100) -> dict:
    """Closure and determinant residuals over random pairs, one RNG stream per trial."""
    audit = lie_dimension_audit(n, special)
    closure = 0.0
    det_res = 0.0
    special_res = 0.0
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        g = random_element(n, special, rng)
        h = random_element(n, special, rng)
        gh = g @ h
        closure = max(closure, unitarity_residual(gh))
        det_res = max(det_res, abs(det_H(gh) - det_H(g) * det_H(h)))
        if special:
            special_res = max(special_res, abs(det_H(gh) - 1.0))
    out = {
        "n": n,
        "special": special,
        "generator_count": audit.generator_count,
        "real_dim": audit.real_tangent_dim,
        "numerical_rank": audit.numerical_rank,
        "closure_residual": closure,
        "det_residual": det_res,
    }
    if special:
        out["unit_det_residual"] = special_res
    return out


# ---------------------------------------------------------------------------
# (s, r) representations


@dataclass(frozen=True)
class RepState:
    sigma: Fraction
    rho: Fraction


def _half_int(val) -> Fraction:
    f = Fraction(val).limit_denominator(2)
    if f != Fraction(val) or f < 0 or (2 * f).denominator != 1:
        raise ValueError(f"{val!r} is not a non-negative half-integer")
    return f


def _weights(s: Fraction) -> list[Fraction]:
    return [s - k for k in range(int(2 * s) + 1)]


def rep_J3_K3(s, r) -> list[tuple[RepState, HNumber, HNumber]]:
    """Diagonal J3 = rho + sigma and K3 = ij (rho - sigma) on |sigma, rho>."""
    s, r = _half_int(s), _half_int(r)
    out = []
    for sigma in _weights(s):
        for rho in _weights(r):
            j3 = HNumber(float(rho + sigma))
            k3 = IJ * float(rho - sigma)
            out.append((RepState(sigma, rho), j3, k3))
    return out


def verify_rep_consistency(step: float = 1e-5, tol: float = 1e-8) -> dict:
    """Compare the fundamental spinor action with the (1/2,0) and (0,1/2) weights.

    The spinor action psi -> bar(g) psi of SU(2,H) with tau = s/2 is
    differentiated at the identity (central differences), giving J3 and K3
    as 2x2 H-matrices with exp(-i eps G) convention.  Globally K3 = ij J3.
    Inside a sector P+- the unit ij acts as +-i, so the complex ratio
    K3/J3 is +i on one sector and -i on the other.  The weight formulas,
    read inside a complex sector (ij -> i), predict i(rho - sigma)/(rho + sigma):
    -i for (1/2,0) and +i for (0,1/2).  This fixes the sector labels.
    """
    taus = gell_mann_basis(2)

    def spinor_action(phi3: float, xi3: float) -> HMatrix:
        return generate(taus, [0.0, 0.0, phi3], [0.0, 0.0, xi3]).bar_transpose()

    to_gen = HNumber(0.0, 1.0 / (2 * step))
    j3 = (spinor_action(step, 0.0) - spinor_action(-step, 0.0)).scale(to_gen)
    k3 = (spinor_action(0.0, step) - spinor_action(0.0, -step)).scale(to_gen)

    off_diag = max(float(np.abs(m.data[a, b]).max()) for m in (j3, k3) for a, b in ((0, 1), (1, 0)))
    # K3 = ij J3 as H-matrices
    global_residual = (k3 - j3.scale(IJ)).norm()

    predicted = {}
    for label, (s, r) in (("(1/2,0)", (Fraction(1, 2), 0)), ("(0,1/2)", (0, Fraction(1, 2)))):
        _, j, k = rep_J3_K3(s, r)[0]
        predicted[label] = complex(0.0, k.w / j.x)

    j_plus, j_minus = j3.split()
    k_plus, k_minus = k3.split()
    sectors = {}
    for name, jm, km in (("P+", j_plus, k_plus), ("P-", j_minus, k_minus)):
        j_eigs = np.diag(jm)
        k_eigs = np.diag(km)
        ratios = k_eigs / j_eigs
        ratio = complex(ratios[0])
        match = [lab for lab, pred in predicted.items() if np.all(np.abs(ratios - pred) <= tol)]
        sectors[name] = {
            "J3_eigenvalues": sorted(float(e.real) for e in j_eigs),
            "K3_eigenvalues": [[float(e.real), float(e.imag)] for e in k_eigs],
            "K3_over_J3": [ratio.real, ratio.imag],
            "representation": match[0] if len(match) == 1 else None,
        }

    rotation_same = bool(np.max(np.abs(j_plus - j_minus)) <= tol)
    boost_opposite = bool(np.max(np.abs(k_plus + k_minus)) <= tol)
    j_spectrum_ok = all(
        np.allclose(sec["J3_eigenvalues"], [-0.5, 0.5], atol=tol) for sec in sectors.values()
    )
    labels = {sec["representation"] for sec in sectors.values()}
    ok = (
        rotation_same
        and boost_opposite
        and j_spectrum_ok
        and labels == {"(1/2,0)", "(0,1/2)"}
        and off_diag <= tol
        and global_residual <= tol
    )
    return {
        "sectors": sectors,
        "K3_equals_ij_J3_residual": global_residual,
        "rotation_generator_same_in_both_sectors": rotation_same,
        "boost_generator_opposite_in_sectors": boost_opposite,
        "pass": bool(ok),
    }
