import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperpauli import hypercomplex as hc
from hyperpauli.errors import NotInvertible
from hyperpauli.hypercomplex import HNumber, I, IJ, J, ONE, P_MINUS, P_PLUS, SplitPair

from .conftest import hnumbers


def close(a, b, tol=1e-13):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


class TestMultiplication:
    def test_basis_squares(self):
        assert I * I == HNumber(-1)
        assert J * J == ONE
        assert IJ * IJ == HNumber(-1)
        assert I * J == IJ == J * I

    def test_zero_divisor(self):
        assert (1 + J) * (1 - J) == HNumber()

    def test_full_table_against_complex_pairs(self):
        # i -> (i, i), j -> (1, -1) on the two idempotent sectors
        images = {ONE: (1, 1), I: (1j, 1j), J: (1, -1), IJ: (1j, -1j)}
        for a, (ap, am) in images.items():
            for b, (bp, bm) in images.items():
                s = hc.split(a * b)
                assert s.plus == ap * bp and s.minus == am * bm

    @given(hnumbers, hnumbers, hnumbers)
    def test_ring_axioms(self, a, b, c):
        assert close((a * b) * c, a * (b * c))
        assert close(a * b, b * a)
        assert close(a * (b + c), a * b + a * c)

    @given(hnumbers, hnumbers)
    def test_split_is_multiplicative(self, a, b):
        assert close(hc.join(hc.split(a) * hc.split(b)), a * b)

    def test_scalar_promotion(self):
        assert 2 * I == HNumber(0, 2)
        assert HNumber(1, 1) * 1j == HNumber(-1, 1)
        assert HNumber(3) - 1 == HNumber(2)
        assert 1 - HNumber(3) == HNumber(-2)


class TestInvolutions:
    def test_examples(self):
        assert hc.conj_full(I) == HNumber(0, -1)
        assert hc.conj_full(IJ) == IJ
        assert hc.conj_full(HNumber(1, 1, 1, 1)) == HNumber(1, -1, -1, 1)
        assert hc.conj_i(I + J) == HNumber(0, -1, 1)
        assert hc.conj_j(I + J) == HNumber(0, 1, -1)

    @given(hnumbers, hnumbers)
    def test_homomorphisms(self, a, b):
        for f in (hc.conj_full, hc.conj_i, hc.conj_j):
            assert f(f(a)) == a
            assert close(f(a * b), f(a) * f(b))
            assert f(a + b) == f(a) + f(b)

    @given(hnumbers)
    def test_composition(self, z):
        assert hc.conj_i(hc.conj_j(z)) == hc.conj_full(z)
        assert hc.conj_j(hc.conj_i(z)) == hc.conj_full(z)


class TestSplit:
    def test_examples(self):
        assert hc.split(ONE) == SplitPair(1, 1)
        assert hc.split(J) == SplitPair(1, -1)
        z = HNumber(0.3, -1.2, 2.5, 0.7)
        s = hc.split(P_PLUS * z)
        assert s.plus == hc.split(z).plus and s.minus == 0

    @given(st.lists(st.integers(-2**20, 2**20), min_size=4, max_size=4), st.integers(0, 30))
    def test_round_trip_bit_exact_on_dyadics(self, ints, shift):
        z = HNumber(*(k / 2**shift for k in ints))
        assert hc.join(hc.split(z)) == z

    def test_idempotents(self):
        assert P_PLUS * P_PLUS == P_PLUS
        assert P_MINUS * P_MINUS == P_MINUS
        assert P_PLUS * P_MINUS == HNumber()
        assert P_PLUS + P_MINUS == ONE

    def test_array_helpers_match_scalar(self, rng):
        a = rng.normal(size=(6, 4))
        b = rng.normal(size=(6, 4))
        prod = hc.mul_arrays(a, b)
        plus, minus = hc.split_array(a)
        for k in range(6):
            za, zb = HNumber.from_array(a[k]), HNumber.from_array(b[k])
            assert np.allclose(prod[k], (za * zb).as_array(), atol=1e-15)
            s = hc.split(za)
            assert plus[k] == s.plus and minus[k] == s.minus
        assert np.allclose(hc.join_array(plus, minus), a, atol=0)


class TestExp:
    def test_hyperbolic_unit(self):
        assert close(hc.exp(J), HNumber(math.cosh(1), 0, math.sinh(1)), 1e-15)

    def test_complex_unit(self):
        assert close(hc.exp(I * (math.pi / 2)), I, 1e-15)

    def test_zero(self):
        assert hc.exp(HNumber()) == ONE

    @given(st.builds(HNumber, *(st.floats(-5, 5),) * 4))
    def test_inverse(self, z):
        assert close(hc.exp(z) * hc.exp(-z), ONE, 1e-10)

    @given(st.builds(HNumber, *(st.floats(-3, 3),) * 4), st.builds(HNumber, *(st.floats(-3, 3),) * 4))
    def test_additive(self, z, w):
        assert close(hc.exp(z + w), hc.exp(z) * hc.exp(w), 1e-12)


class TestInvert:
    def test_examples(self):
        assert hc.invert(HNumber(2)) == HNumber(0.5)
        assert hc.invert(J) == J
        with pytest.raises(NotInvertible):
            hc.invert(1 + J)
        with pytest.raises(NotInvertible):
            hc.invert(P_MINUS * HNumber(3, 4))

    def test_guard_band(self):
        # a rounding-level minus component is still a zero divisor
        z = HNumber(1, 0, 1 - 1e-15)
        assert not hc.is_invertible(z)
        assert hc.is_invertible(HNumber(1, 0, 1 - 1e-6))

    @given(hnumbers)
    def test_inverse_when_invertible(self, z):
        if hc.is_invertible(z, 1e-6):
            assert close(z * hc.invert(z), ONE, 1e-8)
        else:
            s = hc.split(z)
            assert min(abs(s.plus), abs(s.minus)) < 1e-6 * (1 + abs(z))

    def test_division(self):
        z = HNumber(1, 2, 0.5, -1)
        assert close((z / HNumber(0.5, 0, 2)) * HNumber(0.5, 0, 2), z)


class TestValue:
    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            HNumber(float("nan"))
        with pytest.raises(ValueError):
            HNumber(0, float("inf"))

    def test_immutable(self):
        z = HNumber(1)
        with pytest.raises(AttributeError):
            z.x = 2.0

    @given(hnumbers)
    def test_json_round_trip(self, z):
        text = json.dumps(z.to_json())
        assert set(json.loads(text)) == {"x", "y", "v", "w"}
        assert HNumber.from_json(json.loads(text)) == z

    def test_json_shortest_repr(self):
        z = HNumber(0.1, 1 / 3, -2.5e-300, 1e16 + 2)
        assert json.loads(json.dumps(z.to_json())) == z.to_json()
        assert json.dumps(z.to_json()) == '{"x": 0.1, "y": 0.3333333333333333, "v": -2.5e-300, "w": 1.0000000000000002e+16}'
