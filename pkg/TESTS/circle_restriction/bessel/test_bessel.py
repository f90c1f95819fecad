"""Tests for Bessel evaluation and its explicit bounds."""

import numpy as np
import pytest

from circle_restriction.bessel import (
    bessel_j,
    bessel_j_mp,
    envelope_bound,
    hankel_coefficients,
    j0_asymptotic_defect,
    parity_sign,
)
from circle_restriction.errors import InvalidInputError


@pytest.mark.unit
class TestBesselJ:
    def test_value_at_origin(self):
        assert bessel_j(0, 0.0) == 1.0
        assert bessel_j(3, 0.0) == 0.0

    def test_known_values(self):
        assert bessel_j(0, 1.0) == pytest.approx(0.7651976865579666, abs=1e-15)
        assert bessel_j(1, 2.0) == pytest.approx(0.5767248077568734, abs=1e-15)

    def test_negative_order_parity(self):
        r = np.linspace(0.5, 40.0, 50)
        for n in range(1, 8):
            np.testing.assert_allclose(bessel_j(-n, r), (-1) ** n * bessel_j(n, r), rtol=0, atol=0)
        assert parity_sign(-3) == -1
        assert parity_sign(-4) == 1
        assert parity_sign(3) == 1

    def test_scalar_and_array_shapes(self):
        assert isinstance(bessel_j(2, 1.5), float)
        values = bessel_j(2, np.array([0.5, 1.5, 2.5]))
        assert values.shape == (3,)

    def test_recurrence_residual(self):
        rng = np.random.default_rng(0)
        orders = rng.integers(1, 60, size=200)
        radii = np.exp(rng.uniform(np.log(0.5), np.log(1e4), size=200))
        for n, r in zip(orders, radii):
            lhs = bessel_j(n - 1, r) + bessel_j(n + 1, r)
            rhs = 2 * n / r * bessel_j(n, r)
            assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(bessel_j(n, r)))

    @pytest.mark.parametrize("r", [0.5, 7.3, 25.0, 50.0])
    def test_squares_sum_to_one(self, r):
        orders = np.arange(1, 121)
        total = bessel_j(0, r) ** 2 + 2 * sum(bessel_j(int(n), r) ** 2 for n in orders)
        assert total == pytest.approx(1.0, abs=1e-10)

    def test_extended_precision_agrees(self):
        for n, r in ((0, 5.0), (7, 12.5), (-3, 2.0)):
            assert float(bessel_j_mp(n, r)) == pytest.approx(bessel_j(n, r), abs=1e-14)

    @pytest.mark.parametrize("r", [-1.0, float("nan"), float("inf")])
    def test_invalid_radius(self, r):
        with pytest.raises(InvalidInputError):
            bessel_j(0, r)


@pytest.mark.unit
class TestAsymptotics:
    def test_j0_defect_below_classical_bound(self):
        r = np.linspace(1.0, 1000.0, 2000)
        assert np.all(j0_asymptotic_defect(r) <= r ** -1.5)

    def test_j0_defect_requires_positive_radius(self):
        with pytest.raises(InvalidInputError):
            j0_asymptotic_defect(0.0)

    def test_hankel_coefficients(self):
        # a_1(0) = -1/8, a_2(0) = 9/128
        coefficients = hankel_coefficients(0, 3)
        np.testing.assert_allclose(coefficients, [1.0, -1 / 8, 9 / 128])
        # the expansion terminates for half-integer orders, never for integers
        assert np.all(hankel_coefficients(5, 4) != 0)

    def test_hankel_count_must_be_positive(self):
        with pytest.raises(InvalidInputError):
            hankel_coefficients(0, 0)


@pytest.mark.unit
class TestEnvelope:
    def test_example(self):
        assert envelope_bound(0, 8.0) == pytest.approx(0.5)

    def test_dominates_bessel(self):
        rng = np.random.default_rng(1)
        orders = rng.integers(0, 256, size=1000)
        radii = np.exp(rng.uniform(np.log(1e-3), np.log(1e4), size=1000))
        for n, r in zip(orders, radii):
            assert envelope_bound(n, r) >= abs(bessel_j(n, r))

    def test_small_argument_branch(self):
        # r^n / (2^n n!) at n = 2, r = 0.1
        assert envelope_bound(2, 0.1) == pytest.approx(0.1**2 / 8)

    def test_invalid_arguments(self):
        with pytest.raises(InvalidInputError):
            envelope_bound(-1, 1.0)
        with pytest.raises(InvalidInputError):
            envelope_bound(0, 0.0)
