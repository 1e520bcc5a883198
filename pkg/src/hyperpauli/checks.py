"""Randomised identity suites and the report structure used by the CLI.

Every suite draws from its own PCG64 stream seeded by ``(seed, suite index)``
so reports are reproducible regardless of how suites are scheduled.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import hypercomplex as hc
from . import hyperbolic_unitary as hu
from . import pauli_algebra as pa
from . import spin_group as sg
from .hypercomplex import HNumber
from .pauli_algebra import AlgebraElement, Paravector

THREADS_ENV = "HYPER_CLI_THREADS"


@dataclass
class Check:
    name: str
    residual: float
    tolerance: float
    passed: bool = field(init=False)

    def __post_init__(self) -> None:
        self.residual = float(self.residual)
        self.passed = bool(self.residual <= self.tolerance)

    def to_json(self) -> dict:
        return {"name": self.name, "residual": self.residual, "tolerance": self.tolerance, "pass": self.passed}


@dataclass
class Report:
    suite: str
    seed: int
    trials: int
    checks: list[Check]
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "checks": [c.to_json() for c in self.checks],
            "pass": self.passed,
        }
        if timing:
            out["wall_time"] = self.wall_time
        return out


def make_rng(seed: int, stream: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, stream])))


# ---------------------------------------------------------------------------
# random objects


def random_hnumber(rng: np.random.Generator, scale: float = 1.0) -> HNumber:
    return HNumber(*(rng.uniform(-scale, scale, 4)))


def random_element(rng: np.random.Generator, scale: float = 1.0) -> AlgebraElement:
    return AlgebraElement.from_array(rng.uniform(-scale, scale, (4, 4)))


def random_paravector(rng: np.random.Generator, scale: float = 1.0) -> Paravector:
    return Paravector(*rng.uniform(-scale, scale, 4))


def random_unit(rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_spin(rng: np.random.Generator, factors: int = 2) -> sg.SpinTransform:
    """Product of ``factors`` random rotors and boosts."""
    g = sg.IDENTITY
    for _ in range(factors):
        g = sg.rotor(random_unit(rng), rng.uniform(-math.pi, math.pi)) @ g
        g = sg.boost(random_unit(rng), rng.uniform(-1.5, 1.5)) @ g
    return g


def _rel(a, b) -> float:
    """Relative difference for HNumber or AlgebraElement values."""
    return abs(a - b) / max(1.0, abs(a), abs(b)) if isinstance(a, HNumber) else (a - b).norm() / max(
        1.0, a.norm(), b.norm()
    )


# ---------------------------------------------------------------------------
# suites


def suite_ring(rng: np.random.Generator, trials: int) -> list[Check]:
    assoc = comm = dist = split_hom = conj_hom = exp_add = 0.0
    for _ in range(trials):
        a, b, c = (random_hnumber(rng) for _ in range(3))
        assoc = max(assoc, _rel((a * b) * c, a * (b * c)))
        comm = max(comm, _rel(a * b, b * a))
        dist = max(dist, _rel(a * (b + c), a * b + a * c))
        sp = hc.split(a) * hc.split(b)
        split_hom = max(split_hom, _rel(hc.join(sp), a * b))
        for f in (hc.conj_full, hc.conj_i, hc.conj_j):
            conj_hom = max(conj_hom, _rel(f(a * b), f(a) * f(b)))
        z = random_hnumber(rng, 5.0)
        exp_add = max(exp_add, _rel(hc.exp(z) * hc.exp(-z), hc.ONE))
    idem = max(
        abs(hc.P_PLUS * hc.P_PLUS - hc.P_PLUS),
        abs(hc.P_MINUS * hc.P_MINUS - hc.P_MINUS),
        abs(hc.P_PLUS * hc.P_MINUS),
        abs(hc.P_PLUS + hc.P_MINUS - hc.ONE),
    )
    return [
        Check("ring.associativity", assoc, 1e-13),
        Check("ring.commutativity", comm, 1e-13),
        Check("ring.distributivity", dist, 1e-13),
        Check("ring.split_homomorphism", split_hom, 1e-13),
        Check("ring.involution_homomorphism", conj_hom, 1e-13),
        Check("ring.exp_inverse", exp_add, 1e-10),
        Check("ring.idempotents", idem, 0.0),
    ]


def suite_algebra(rng: np.random.Generator, trials: int) -> list[Check]:
    assoc = oracle = rev = conj = invol = 0.0
    for _ in range(trials):
        a, b, c = (random_element(rng) for _ in range(3))
        ab = pa.gp(a, b)
        assoc = max(assoc, _rel(pa.gp(ab, c), pa.gp(a, pa.gp(b, c))))
        via_matrix = pa.from_matrix(pa.matrix_rep(a) @ pa.matrix_rep(b))
        oracle = max(oracle, float(np.abs(via_matrix.as_array() - ab.as_array()).max()))
        rev = max(rev, _rel(pa.reversion(ab), pa.gp(pa.reversion(b), pa.reversion(a))))
        conj = max(conj, _rel(pa.conjugation(ab), pa.gp(pa.conjugation(b), pa.conjugation(a))))
        invol = max(
            invol,
            _rel(pa.reversion(pa.reversion(a)), a),
            _rel(pa.conjugation(pa.conjugation(a)), a),
            _rel(pa.conjugation(pa.reversion(a)), pa.reversion(pa.conjugation(a))),
        )
    return [
        Check("algebra.associativity", assoc, 1e-12),
        Check("algebra.matrix_oracle", oracle, 1e-13),
        Check("algebra.reversion_antihomomorphism", rev, 1e-12),
        Check("algebra.conjugation_antihomomorphism", conj, 1e-12),
        Check("algebra.involutions", invol, 1e-15),
    ]


def suite_metric(rng: np.random.Generator, trials: int) -> list[Check]:
    eta = np.diag([1.0, -1.0, -1.0, -1.0])
    table = 0.0
    for mu in range(4):
        for nu in range(4):
            x = Paravector(*np.eye(4)[mu])
            y = Paravector(*np.eye(4)[nu])
            table = max(table, abs(pa.minkowski(x, y) - eta[mu, nu]))
    scalar_only = quad = 0.0
    for _ in range(trials):
        x = random_paravector(rng, 3.0)
        xx = pa.gp(x.to_element(), pa.conjugation(x.to_element()))
        scalar_only = max(scalar_only, max(abs(c) for c in xx.vec))
        quad = max(quad, abs(xx.c0.x - pa.minkowski(x, x)) / (1.0 + x.euclid_norm() ** 2))
    return [
        Check("metric.eta_table", table, 1e-14),
        Check("metric.x_xbar_scalar", scalar_only, 1e-13),
        Check("metric.x_xbar_norm", quad, 1e-12),
    ]


def suite_spin(rng: np.random.Generator, trials: int) -> list[Check]:
    unit = residue = drift = hom = 0.0
    for _ in range(trials):
        g = random_spin(rng)
        h = random_spin(rng, 1)
        x = random_paravector(rng, 2.0)
        unit = max(unit, g.unitarity_residual())
        xp = sg.apply_element(g, x.to_element())
        residue = max(residue, pa.paravector_residue(xp) / max(1.0, xp.norm()))
        xpv = pa.to_paravector(xp, tol=1e-9)
        drift = max(drift, abs(pa.minkowski(xpv, xpv) - pa.minkowski(x, x)) / (1.0 + x.euclid_norm() ** 2))
        gp_, gm = sg.to_complex_pair(g @ h)
        ap, am = sg.to_complex_pair(g)
        bp, bm = sg.to_complex_pair(h)
        hom = max(hom, np.abs(gp_ - ap @ bp).max(), np.abs(gm - am @ bm).max())
    cover = max(
        (sg.rotor(random_unit(rng), 2 * math.pi).g + pa.IDENTITY).norm(),
        (sg.rotor(random_unit(rng), 4 * math.pi).g - pa.IDENTITY).norm(),
    )
    xi1, xi2 = rng.uniform(-1, 1, 2)
    z = [0.0, 0.0, 1.0]
    additivity = _rel((sg.boost(z, xi1) @ sg.boost(z, xi2)).g, sg.boost(z, xi1 + xi2).g)
    return [
        Check("spin.unitarity", unit, 1e-11),
        Check("spin.paravector_residue", residue, 1e-11),
        Check("spin.norm_drift", drift, 1e-10),
        Check("spin.complex_pair_homomorphism", hom, 1e-12),
        Check("spin.double_cover", cover, 1e-12),
        Check("spin.rapidity_additivity", additivity, 1e-10),
    ]


def suite_unitary(rng: np.random.Generator, trials: int) -> list[Check]:
    closure = det = 0.0
    count = max(1, trials // 4)
    for _ in range(count):
        n = int(rng.integers(2, 5))
        g = hu.random_element(n, True, rng)
        h = hu.random_element(n, True, rng)
        closure = max(closure, hu.unitarity_residual(g @ h))
        det = max(det, abs(hu.det_H(g @ h) - hu.det_H(g) * hu.det_H(h)))
    rank_gap = 0
    for n in (1, 2, 3, 4):
        a = hu.lie_dimension_audit(n + 1, True)
        rank_gap += abs(a.numerical_rank - 2 * n * (n + 2)) + abs(a.generator_count - n * (n + 2))
    return [
        Check("unitary.closure", closure, 1e-11),
        Check("unitary.det_multiplicativity", det, 1e-11),
        Check("unitary.dimension_audit", rank_gap, 0.0),
    ]


SUITES: tuple[tuple[str, Callable[[np.random.Generator, int], list[Check]]], ...] = (
    ("ring", suite_ring),
    ("algebra", suite_algebra),
    ("metric", suite_metric),
    ("spin", suite_spin),
    ("unitary", suite_unitary),
)


def thread_cap() -> int:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def check_identities(seed: int, trials: int, tol: float | None = None) -> Report:
    """Run every suite; ``tol`` replaces all per-check tolerances when given."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    start = time.perf_counter()

    def run(item):
        idx, (_, fn) = item
        return fn(make_rng(seed, idx), trials)

    with ThreadPoolExecutor(max_workers=thread_cap()) as pool:
        results = list(pool.map(run, enumerate(SUITES)))
    checks = [c for group in results for c in group]
    if tol is not None:
        checks = [Check(c.name, c.residual, tol) for c in checks]
    return Report("check-identities", seed, trials, checks, time.perf_counter() - start)

