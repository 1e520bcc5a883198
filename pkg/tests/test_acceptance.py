"""Acceptance gate: one test per criterion, each at its stated tolerance.

A PASS/FAIL line per criterion is printed in the terminal summary (see
conftest.py).  Random draws use fixed PCG64 streams.
"""

import json
import math
import subprocess
import sys
import time
from fractions import Fraction

import numpy as np

from hyperpauli import fields as fl
from hyperpauli import hypercomplex as hc
from hyperpauli import hyperbolic_unitary as hu
from hyperpauli import pauli_algebra as pa
from hyperpauli import spin_group as sg
from hyperpauli.checks import make_rng, random_element, random_paravector, random_spin, random_unit
from hyperpauli.hypercomplex import HNumber, IJ
from hyperpauli.pauli_algebra import E, IDENTITY, AlgebraElement, Paravector
from hyperpauli.spin_group import HSpinor

LEVI = {(1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1, (2, 1, 3): -1, (3, 2, 1): -1, (1, 3, 2): -1}


def rel(a, b):
    return (a - b).norm() / max(1.0, a.norm(), b.norm())


def random_spinor(rng):
    return HSpinor(HNumber(*rng.normal(size=4)), HNumber(*rng.normal(size=4)))


def test_criterion_01_algebra_tables():
    start = time.perf_counter()
    worst = 0.0
    for k in (1, 2, 3):
        for l in (1, 2, 3):
            want = AlgebraElement(float(k == l))
            for m in (1, 2, 3):
                want = want + IJ * E[m] * LEVI.get((k, l, m), 0)
            worst = max(worst, (pa.gp(E[k], E[l]) - want).norm())
    eta = np.diag([1.0, -1.0, -1.0, -1.0])
    for mu in range(4):
        for nu in range(4):
            x, y = Paravector(*np.eye(4)[mu]), Paravector(*np.eye(4)[nu])
            worst = max(worst, abs(pa.minkowski(x, y) - eta[mu, nu]))
    assert worst <= 1e-14
    assert time.perf_counter() - start < 1.0


def test_criterion_02_oracle_equivalence():
    rng = make_rng(2, 0)
    start = time.perf_counter()
    worst = 0.0
    for _ in range(1000):
        a, b = random_element(rng), random_element(rng)
        via_matrix = pa.from_matrix(pa.matrix_rep(a) @ pa.matrix_rep(b))
        worst = max(worst, float(np.abs(via_matrix.as_array() - pa.gp(a, b).as_array()).max()))
    assert worst <= 1e-13
    assert time.perf_counter() - start < 5.0


def test_criterion_03_involution_laws():
    rng = make_rng(3, 0)
    worst = 0.0
    for _ in range(1000):
        a, b = random_element(rng), random_element(rng)
        ab = pa.gp(a, b)
        worst = max(
            worst,
            rel(pa.reversion(ab), pa.gp(pa.reversion(b), pa.reversion(a))),
            rel(pa.conjugation(ab), pa.gp(pa.conjugation(b), pa.conjugation(a))),
        )
    assert worst <= 1e-12
    for k in (1, 2, 3):
        assert pa.reversion(E[k]) == E[k]
        assert pa.conjugation(E[k]) == -E[k]


def test_criterion_04_spin_group():
    rng = make_rng(4, 0)
    unit = residue = drift = 0.0
    for _ in range(500):
        g = random_spin(rng)
        x = random_paravector(rng, 2.0)
        unit = max(unit, (pa.gp(g.g, pa.conjugation(g.g)) - IDENTITY).norm())
        xp = sg.apply_element(g, x.to_element())
        residue = max(residue, pa.paravector_residue(xp) / max(1.0, xp.norm()))
        xpv = pa.to_paravector(xp)
        drift = max(drift, abs(pa.minkowski(xpv, xpv) - pa.minkowski(x, x)) / (1 + x.euclid_norm() ** 2))
    assert unit <= 1e-11 and residue <= 1e-11 and drift <= 1e-10
    for _ in range(20):
        assert (sg.rotor(random_unit(rng), 2 * math.pi).g + IDENTITY).norm() <= 1e-12
    for _ in range(20):
        n = random_unit(rng)
        a, b = rng.uniform(-2, 2, 2)
        assert rel((sg.boost(n, a) @ sg.boost(n, b)).g, sg.boost(n, a + b).g) <= 1e-10


def test_criterion_05_group_isomorphism():
    rng = make_rng(5, 0)
    hom = det = 0.0
    for _ in range(200):
        g, h = random_spin(rng), random_spin(rng)
        gh_p, gh_m = sg.to_complex_pair(g @ h)
        gp_, gm = sg.to_complex_pair(g)
        hp, hm = sg.to_complex_pair(h)
        hom = max(hom, np.abs(gh_p - gp_ @ hp).max(), np.abs(gh_m - gm @ hm).max())
        det = max(det, abs(np.linalg.det(gp_) - 1), abs(np.linalg.det(gm) - 1))
    assert hom <= 1e-12
    assert det <= 1e-11


def test_criterion_06_dimension_audit():
    start = time.perf_counter()
    for n, count in ((1, 3), (2, 8), (3, 15)):
        audit = hu.lie_dimension_audit(n + 1, True)
        assert audit.generator_count == n * (n + 2) == count
        assert audit.numerical_rank == 2 * n * (n + 2)
    assert time.perf_counter() - start < 10.0


def test_criterion_07_representation_eigenvalues():
    half = Fraction(1, 2)
    for s, r in ((half, 0), (0, half), (half, half)):
        for state, j3, k3 in hu.rep_J3_K3(s, r):
            assert abs(j3 - HNumber(float(state.rho + state.sigma))) <= 1e-14
            assert abs(k3 - IJ * float(state.rho - state.sigma)) <= 1e-14
    spectrum = sorted(j.x for _, j, _ in hu.rep_J3_K3(half, half))
    assert spectrum == [-1.0, 0.0, 0.0, 1.0]
    report = hu.verify_rep_consistency()
    assert report["pass"]
    assert report["boost_generator_opposite_in_sectors"] and report["rotation_generator_same_in_both_sectors"]


def test_criterion_08_klein_gordon_lattice():
    start = time.perf_counter()
    p, m = Paravector(1.0, 0.0, 0.0, 0.6), 0.8
    levels = fl.kg_convergence(p, m, (32, 32), refinements=3)
    assert [lv.n for lv in levels] == [32, 64, 128]
    assert all(1.8 <= lv.order <= 2.2 for lv in levels[1:])
    rng = make_rng(8, 0)
    u = random_spinor(rng)
    assert fl.kg_residual_planewave(fl.PlaneWaveSpinor(u, p), m).norm() <= 1e-12
    for _ in range(100):
        k = rng.uniform(-2, 2, 3)
        q = Paravector(math.sqrt(m * m + k @ k), *k)
        assert fl.kg_residual_planewave(fl.PlaneWaveSpinor(u, q), m).norm() <= 1e-12 * max(1.0, u.norm())
    assert time.perf_counter() - start < 30.0


def test_criterion_09_maxwell_null_check():
    rng = make_rng(9, 0)
    for _ in range(100):
        eps = random_paravector(rng)
        k3 = rng.uniform(-2, 2, 3)
        k = Paravector(float(np.linalg.norm(k3)), *k3)
        assert fl.maxwell_residual(fl.PlaneWaveGauge(eps, k)) <= 1e-12
    for _ in range(100):
        eps = random_paravector(rng)
        k = random_paravector(rng, 2.0)
        bound = abs(pa.minkowski(k, k)) * eps.euclid_norm() * (1 - 1e-10)
        assert fl.maxwell_residual(fl.PlaneWaveGauge(eps, k)) >= bound


def test_criterion_10_action():
    rng = make_rng(10, 0)
    n = 64
    p, m = Paravector(1.0, 0.0, 0.0, 0.6), 0.8
    h = fl.commensurate_box(p) / n
    psi = fl.LatticeField.from_planewave_spinor(fl.PlaneWaveSpinor(random_spinor(rng), p), (n, n), h)
    A = fl.LatticeField.from_planewave_gauge(
        fl.PlaneWaveGauge(random_paravector(rng), Paravector(0.4, 0, 0, -0.4)), (n, n), h
    )
    vol = psi.volume
    # on-shell for the exact derivative, and for the stencil at its own dispersion relation
    for method, mass in (("spectral", m), ("central", math.sqrt(fl.lattice_dispersion(p, h)))):
        s = fl.action(A, psi, mass, method)
        assert abs(s.spinor) <= 1e-9 * vol
        assert abs(s.gauge) <= 1e-9 * vol

    base = fl.action(None, psi, 0.5).spinor
    for _ in range(100):
        z = hu.random_element(1, False, rng)[0, 0]
        moved = psi.like(hc.mul_arrays(psi.values, z.as_array()))
        assert abs(fl.action(None, moved, 0.5).spinor - base) <= 1e-10 * max(1.0, abs(base))

    taus = hu.gell_mann_basis(2)
    for _ in range(100):
        ym = fl.assemble_ym(
            [random_paravector(rng) for _ in taus], [random_paravector(rng) for _ in taus], taus
        )
        q = random_paravector(rng)
        multiplet = [random_spinor(rng), random_spinor(rng)]
        g = hu.random_element(2, True, rng)
        before = fl.ym_bilinear(multiplet, fl.ym_mass_operator(q, ym), 0.7)
        after = fl.ym_bilinear(
            fl.transform_multiplet(multiplet, g), fl.ym_mass_operator(q, fl.ym_gauge_transform(ym, g)), 0.7
        )
        assert abs(after - before) <= 1e-10 * max(1.0, abs(before))


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "hyperpauli", *argv], capture_output=True, check=False)


def test_criterion_11_cli_determinism():
    for argv in (
        ("check-identities", "--seed", "42", "--trials", "100", "--json"),
        ("group-info", "--n", "3", "--special", "--seed", "5", "--json"),
        ("kg-verify", "--json"),
        ("transform", "--kind", "boost", "--axis", "0,0,1", "--param", "1", "--x", "1,0,0,0", "--json"),
        ("maxwell", "--k", "1,0,0,1", "--json"),
    ):
        a, b = _cli(*argv), _cli(*argv)
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout
        assert json.loads(a.stdout)["pass"] is True
    assert _cli("check-identities", "--seed", "42", "--trials", "5", "--tol", "1e-300").returncode == 1
    assert _cli("maxwell", "--k", "1,0,0,0", "--tol", "-1").returncode == 1
    assert _cli("check-identities", "--trials", "0").returncode == 2
    assert _cli("kg-verify", "--grid", "64x64", "--h", "0.1").returncode == 2
    assert _cli("transform", "--kind", "boost", "--axis", "1,1,0", "--x", "1,0,0,0").returncode == 2
