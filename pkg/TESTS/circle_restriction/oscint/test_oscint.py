"""
Tests for certified sixfold Bessel integrals.

Run with: pytest TESTS/circle_restriction/oscint/test_oscint.py -v
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from circle_restriction.errors import InvalidInputError, RefusedError
from circle_restriction.oscint import (
    CertifiedValue,
    OrderTuple,
    QuadConfig,
    certified_sum,
    effective_split,
    head_integral,
    integral_table,
    integrate_panels,
    lattice_sum,
    sixfold_integral,
    tail_bound,
)
from circle_restriction.oscint.panels import HEAD_ERROR_ULPS

ALPHA_0 = 0.3368280
SIXFOLD_2_2_4 = 0.00090754


class TestOrderTuple:
    @pytest.mark.unit
    def test_negative_odd_order_flips_sign(self):
        t = OrderTuple.from_orders((1, -1, 0, 0, 0, 0))
        assert t.orders == (1, 1, 0, 0, 0, 0)
        assert t.sign == -1

    @pytest.mark.unit
    def test_negative_even_order_keeps_sign(self):
        t = OrderTuple.from_orders((2, 2, -4, 0, 0, 0))
        assert t.orders == (4, 2, 2, 0, 0, 0)
        assert t.sign == 1
        assert t.key == "4,2,2,0,0,0"
        assert t.total_order == 8

    @pytest.mark.unit
    def test_permutations_share_canonical_form(self):
        a = OrderTuple.from_orders((0, 3, 1, 0, 2, 0))
        b = OrderTuple.from_orders((3, 2, 1, 0, 0, 0))
        assert a == b

    @pytest.mark.unit
    @pytest.mark.parametrize("orders", [(1, 2, 3), (0,) * 7, (0.5, 0, 0, 0, 0, 0), (257, 0, 0, 0, 0, 0)])
    def test_malformed_orders(self, orders):
        with pytest.raises(InvalidInputError):
            OrderTuple.from_orders(orders)


class TestQuadConfig:
    @pytest.mark.unit
    def test_split_radius_range(self):
        with pytest.raises(ValidationError):
            QuadConfig(split_radius=10)
        with pytest.raises(ValidationError):
            QuadConfig(split_radius=2e4)

    @pytest.mark.unit
    def test_tail_order_and_positivity(self):
        with pytest.raises(ValidationError):
            QuadConfig(tail_order=4)
        with pytest.raises(ValidationError):
            QuadConfig(head_tol=0)

    @pytest.mark.unit
    def test_digest_tracks_fields(self):
        assert QuadConfig().digest() == QuadConfig().digest()
        assert QuadConfig().digest() != QuadConfig(split_radius=400).digest()

    @pytest.mark.unit
    def test_effective_split_grows_with_order(self):
        cfg = QuadConfig(split_radius=50)
        assert effective_split(OrderTuple.from_orders((2, 2, 0, 0, 0, 0)), cfg) == 50
        R = effective_split(OrderTuple.from_orders((40, 40, 0, 0, 0, 0)), cfg)
        assert 40**2 <= 8 * R
        assert R <= 1e4


class TestCertifiedValue:
    @pytest.mark.unit
    def test_arithmetic_propagates_errors(self):
        a = CertifiedValue(1.0, 0.01)
        b = CertifiedValue(2.0, 0.02)
        s = a + b
        assert s.value == pytest.approx(3.0)
        assert s.abs_error >= 0.03
        p = a * b
        assert p.value == pytest.approx(2.0)
        assert p.abs_error >= 1.0 * 0.02 + 2.0 * 0.01
        d = 3 * a - b
        assert d.value == pytest.approx(1.0)
        assert d.abs_error >= 0.05
        assert (a / 2).abs_error >= 0.005

    @pytest.mark.unit
    def test_bounds_and_containment(self):
        v = CertifiedValue(1.0, 0.1)
        assert v.lower == pytest.approx(0.9)
        assert v.upper == pytest.approx(1.1)
        assert v.contains(1.05)
        assert not v.contains(1.2)
        assert v.is_positive()
        assert not CertifiedValue(0.05, 0.1).is_positive()

    @pytest.mark.unit
    def test_rejects_invalid(self):
        with pytest.raises(InvalidInputError):
            CertifiedValue(math.nan, 0.0)
        with pytest.raises(InvalidInputError):
            CertifiedValue(1.0, -1e-3)
        with pytest.raises(TypeError):
            CertifiedValue(1.0, 0.0) / CertifiedValue(2.0, 0.0)

    @pytest.mark.unit
    def test_certified_sum(self):
        total = certified_sum([CertifiedValue(1.0, 1e-3)] * 4)
        assert total.value == pytest.approx(4.0)
        assert total.abs_error >= 4e-3
        assert certified_sum([]) == CertifiedValue.exact(0.0)


class TestSixfoldIntegral:
    @pytest.mark.integration
    def test_alpha_zero(self):
        value = sixfold_integral((0,) * 6)
        assert value.abs_error <= 1e-9
        assert abs(value.value - ALPHA_0) <= 1e-7 + value.abs_error

    @pytest.mark.integration
    def test_mixed_orders(self):
        value = sixfold_integral((2, 2, -4, 0, 0, 0))
        assert abs(value.value - SIXFOLD_2_2_4) <= 1e-8 + value.abs_error

    @pytest.mark.integration
    def test_parity_sign(self):
        plain = sixfold_integral((1, 1, 0, 0, 0, 0))
        flipped = sixfold_integral((1, -1, 0, 0, 0, 0))
        assert flipped.value == pytest.approx(-plain.value)
        assert flipped.abs_error == pytest.approx(plain.abs_error)

    @pytest.mark.unit
    def test_total_order_refused(self):
        with pytest.raises(RefusedError):
            sixfold_integral((256, 256, 1, 0, 0, 0))

    @pytest.mark.unit
    def test_order_above_limit_invalid(self):
        with pytest.raises(InvalidInputError):
            sixfold_integral((257, 0, 0, 0, 0, 0))

    @pytest.mark.integration
    def test_split_radius_does_not_change_value(self):
        """Head and tail meet consistently at two different split radii."""
        t = OrderTuple.from_orders((0,) * 6)
        low = head_integral(t, 50.0) + tail_bound(t, 50.0)
        high = head_integral(t, 200.0) + tail_bound(t, 200.0)
        assert abs(low.value - high.value) <= low.abs_error + high.abs_error

    @pytest.mark.integration
    def test_tail_error_shrinks_with_radius(self):
        t = OrderTuple.from_orders((2, 1, 1, 0, 0, 0))
        errors = [tail_bound(t, R).abs_error for R in (40.0, 80.0, 160.0)]
        assert errors[0] > errors[1] > errors[2]

    @pytest.mark.integration
    @pytest.mark.parametrize("orders,factor", [((0, 0, 0, 0, 0, 0), 200), ((2, -2, 0, 0, 0, 0), 25)])
    def test_tail_small_against_head_at_100(self, orders, factor):
        t = OrderTuple.from_orders(orders)
        head = head_integral(t, 100.0)
        tail = tail_bound(t, 100.0)
        assert abs(tail.value) + tail.abs_error < head.value / factor

    @pytest.mark.integration
    def test_tail_error_monotone_on_doubling_sweep(self):
        t = OrderTuple.from_orders((0,) * 6)
        errors = [tail_bound(t, R).abs_error for R in (25.0, 50.0, 100.0, 200.0, 400.0, 800.0)]
        assert all(a >= b for a, b in zip(errors, errors[1:]))
        assert errors[0] > errors[-1]

    @pytest.mark.unit
    def test_tail_and_head_input_checks(self):
        t = OrderTuple.from_orders((0,) * 6)
        with pytest.raises(InvalidInputError):
            tail_bound(t, 10.0)
        with pytest.raises(InvalidInputError):
            tail_bound(t, 100.0, order=5)
        with pytest.raises(InvalidInputError):
            head_integral(t, -1.0)
        assert head_integral(t, 0.0) == CertifiedValue(0.0, 0.0)

    @pytest.mark.integration
    @pytest.mark.parametrize("orders", [(0,) * 6, (2, 2, 0, 0, 0, 0), (1, -1, 0, 0, 0, 0)])
    def test_head_error_not_below_roundoff_floor(self, orders):
        head = head_integral(OrderTuple.from_orders(orders), 50.0)
        assert head.abs_error >= HEAD_ERROR_ULPS * np.finfo(float).eps * abs(head.value)

    @pytest.mark.unit
    def test_panel_sum_carries_summation_roundoff(self):
        value = integrate_panels(lambda r: np.ones_like(r), np.linspace(0.0, 1.0, 5), 1e-12, 100)
        assert value.value == pytest.approx(1.0)
        assert value.abs_error >= 4 * np.finfo(float).eps


class TestIntegralTable:
    @pytest.mark.integration
    def test_permutations_deduplicated(self):
        table = integral_table([(1, 1, 0, 0, 0, 0), (0, 1, 0, -1, 0, 0), (0,) * 6])
        assert set(table) == {(1, 1, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0)}
        assert table[(1, 1, 0, 0, 0, 0)].value > 0

    @pytest.mark.integration
    def test_threaded_matches_serial(self):
        tuples = [(n, n, 0, 0, 0, 0) for n in range(4)]
        serial = integral_table(tuples, workers=1)
        threaded = integral_table(tuples, workers=3)
        assert serial == threaded


class TestLatticeSum:
    @pytest.mark.integration
    def test_constant_maps_give_alpha_zero(self):
        real, imag = lattice_sum([{0: 1.0}] * 6)
        assert real.value == pytest.approx(sixfold_integral((0,) * 6).value)
        assert imag.value == 0.0

    @pytest.mark.integration
    def test_parity_sign_applied(self):
        maps = [{1: 1.0}, {-1: 1.0}, {0: 1.0}, {0: 1.0}, {0: 1.0}, {0: 1.0}]
        real, _ = lattice_sum(maps)
        assert real.value == pytest.approx(-sixfold_integral((1, 1, 0, 0, 0, 0)).value)

    @pytest.mark.unit
    def test_no_lattice_points(self):
        real, imag = lattice_sum([{1: 1.0}] * 6)
        assert real == CertifiedValue.exact(0.0)
        assert imag == CertifiedValue.exact(0.0)

    @pytest.mark.unit
    def test_empty_map_and_wrong_count(self):
        real, _ = lattice_sum([{}] + [{0: 1.0}] * 5)
        assert real.value == 0.0
        with pytest.raises(InvalidInputError):
            lattice_sum([{0: 1.0}] * 5)
