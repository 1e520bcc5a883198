import numpy as np
import pytest
from hypothesis import strategies as st

from hyperpauli.hypercomplex import HNumber
from hyperpauli.pauli_algebra import AlgebraElement, Paravector

# plain complex Pauli matrices, independent of the package
S0 = np.eye(2, dtype=complex)
S1 = np.array([[0, 1], [1, 0]], dtype=complex)
S2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
S3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (S0, S1, S2, S3)


@pytest.fixture
def rng():
    return np.random.default_rng(20100516)


reals = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)
hnumbers = st.builds(HNumber, reals, reals, reals, reals)
elements = st.builds(AlgebraElement, hnumbers, hnumbers, hnumbers, hnumbers)
paravectors = st.builds(Paravector, reals, reals, reals, reals)


def element_split_matrices(a: AlgebraElement):
    """Complex 2x2 matrices of ``a`` in the P+ and P- sectors, built from plain numpy."""
    plus = np.zeros((2, 2), dtype=complex)
    minus = np.zeros((2, 2), dtype=complex)
    for c, s in zip(a.coeffs, PAULI):
        plus += complex(c.x + c.v, c.y + c.w) * s
        minus += complex(c.x - c.v, c.y - c.w) * s
    return plus, minus


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion."""
    results = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            if outcome == "passed" and rep.when != "call":
                continue
            results[nodeid] = "PASS" if outcome == "passed" else "FAIL"
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(results):
        name = nodeid.split("::test_criterion_")[1]
        num, _, label = name.partition("_")
        terminalreporter.write_line(f"{results[nodeid]}  criterion {int(num):2d}  {label.replace('_', ' ')}")
