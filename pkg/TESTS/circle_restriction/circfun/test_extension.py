"""
Tests for the L^6 norm of the extension transform and the restriction quotient.

Run with: pytest TESTS/circle_restriction/circfun/test_extension.py -v
"""

import math

import pytest

from circle_restriction.circfun import (
    TrigPoly,
    dual_route_check,
    extension_norm6_direct,
    extension_norm6_spectral,
    invariance_check,
    monotonicity_chain_check,
    phi,
    phi_sixth,
    plancherel_check,
    random_test_function,
)
from circle_restriction.errors import InvalidInputError, RefusedError

# ((2 pi)^4 alpha_0)^(1/6)
PHI_OF_CONSTANT = 2.84023


class TestSpectralRoute:
    @pytest.mark.integration
    def test_phi_of_constant(self, one):
        assert phi(one) == pytest.approx(PHI_OF_CONSTANT, abs=1e-4)

    @pytest.mark.integration
    def test_constant_norm_matches_alpha_zero(self, one):
        value = extension_norm6_spectral(one)
        assert value.value == pytest.approx((2 * math.pi) ** 7 * 0.3368280, rel=1e-6)

    @pytest.mark.integration
    def test_homogeneity(self, one):
        base = extension_norm6_spectral(one)
        doubled = extension_norm6_spectral(one * 2)
        assert doubled.value == pytest.approx(64 * base.value, rel=1e-12)

    @pytest.mark.unit
    def test_zero_and_degree_limits(self):
        assert extension_norm6_spectral(TrigPoly()).value == 0.0
        with pytest.raises(RefusedError):
            extension_norm6_spectral(TrigPoly.cosine(17))
        with pytest.raises(InvalidInputError):
            phi_sixth(TrigPoly())

    @pytest.mark.integration
    def test_constant_beats_oscillating_mode(self, one):
        assert phi(TrigPoly.cosine(2)) < phi(one)


class TestChecks:
    @pytest.mark.unit
    @pytest.mark.parametrize("seed", range(5))
    def test_plancherel(self, seed):
        record = plancherel_check(random_test_function(8, seed, "real-even"))
        assert record.passed
        assert record.claim == "plancherel"

    @pytest.mark.integration
    def test_invariance(self):
        record = invariance_check(random_test_function(2, 0, "real"))
        assert record.passed, record.values

    @pytest.mark.slow
    def test_monotonicity_chain(self):
        record = monotonicity_chain_check(random_test_function(2, 1, "real"))
        assert record.passed, record.values
        assert record.values["phi"]["f"] <= record.values["phi"]["sharp"] + record.error_budget

    @pytest.mark.slow
    def test_dual_route_on_constant(self, one):
        record = dual_route_check(one)
        assert record.passed, record.values
        assert record.notes == ["direct-route tail error is a next-order estimate"]

    @pytest.mark.slow
    def test_dual_route_on_one_plus_cos2(self, one):
        f = one + TrigPoly.cosine(2)
        assert f.coefficient(2) == 0.5 and f.coefficient(-2) == 0.5
        record = dual_route_check(f)
        assert record.passed, record.values
        assert record.values["relative_deviation"] <= 1e-4

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", [0, 1])
    def test_dual_route_on_random_real(self, seed):
        f = random_test_function(2 + 2 * seed, seed, "real")
        record = dual_route_check(f)
        assert record.passed, record.values

    @pytest.mark.unit
    def test_direct_route_radial_cut(self, one):
        with pytest.raises(InvalidInputError):
            extension_norm6_direct(one, radial_cut=50)
        assert extension_norm6_direct(TrigPoly()).value == 0.0
