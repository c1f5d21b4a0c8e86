"""Conjugate composition and response evaluation against the direct
magnitude-formula oracles."""

import math

import numpy as np
import pytest

import oracles
from graphfilt.elliptic import adjust_modulus_elliptic
from graphfilt.errors import CompositionError
from graphfilt.prototype import (
    PoleZeroSet,
    poles_butterworth,
    poles_cheb1,
    poles_zeros_cheb2,
    ripple_from_attenuation,
    zeros_poles_elliptic,
)
from graphfilt.response import (
    attenuation_db,
    compose_conjugate,
    evaluate_response,
    evaluate_response_coeffs,
    identity_response,
)

RIPPLE = ripple_from_attenuation(1.0, 30.0)
GRID = np.linspace(0.0, 2.0, 200)


def composed(family, order):
    if family == "butterworth":
        return compose_conjugate(poles_butterworth(order, RIPPLE.eps_p, 1.0))
    if family == "chebyshev1":
        return compose_conjugate(poles_cheb1(order, RIPPLE.eps_p, 1.0))
    if family == "chebyshev2":
        return compose_conjugate(poles_zeros_cheb2(order, RIPPLE.eps_s, 1.2))
    adj = adjust_modulus_elliptic(order, RIPPLE.k1)
    return compose_conjugate(zeros_poles_elliptic(order, RIPPLE, 1.0, adj))


def oracle(family, order, lam):
    if family == "butterworth":
        return oracles.butterworth_response(order, RIPPLE.eps_p, 1.0, lam)
    if family == "chebyshev1":
        return oracles.cheb1_response(order, RIPPLE.eps_p, 1.0, lam)
    if family == "chebyshev2":
        return oracles.cheb2_response(order, RIPPLE.eps_s, 1.2, lam)
    adj = adjust_modulus_elliptic(order, RIPPLE.k1)
    return oracles.elliptic_response(order, RIPPLE.eps_p, 1.0, adj, RIPPLE.k1, lam)


class TestComposition:
    def test_butterworth_order_one_coefficients(self):
        # unit ripple: poles at +/- j, so the denominator is exactly 1 + lam^2
        r = compose_conjugate(poles_butterworth(1, 1.0, 1.0))
        np.testing.assert_allclose(r.num_coeffs, [1.0])
        np.testing.assert_allclose(r.den_coeffs, [1.0, 0.0, 1.0], atol=1e-15)

    def test_cheb2_order_two_numerator(self):
        r = compose_conjugate(poles_zeros_cheb2(2, RIPPLE.eps_s, 1.0))
        np.testing.assert_allclose(r.num_coeffs, [1.0, 0.0, -1.0, 0.0, 0.25], atol=1e-14)

    @pytest.mark.parametrize("order", range(1, 13))
    def test_butterworth_denominator_identity(self, order):
        # expanded denominator must equal 1 + eps_p^2 x^(2N): every
        # intermediate coefficient cancels
        r = composed("butterworth", order)
        want = np.zeros(2 * order + 1)
        want[0] = 1.0
        want[-1] = RIPPLE.eps_p**2
        np.testing.assert_allclose(r.den_coeffs, want, atol=1e-9)
        assert list(r.num_coeffs) == [1.0]

    def test_non_conjugate_input_is_rejected(self):
        bad = PoleZeroSet.__new__(PoleZeroSet)
        object.__setattr__(bad, "poles", np.array([1j, 2j, -1j, -0.5j]))
        object.__setattr__(bad, "zeros", np.array([], dtype=complex))
        object.__setattr__(bad, "order", 2)
        object.__setattr__(bad, "gain", 1.0)
        object.__setattr__(bad, "lambda_ref", 1.0)
        with pytest.raises(CompositionError):
            compose_conjugate(bad)

    @pytest.mark.parametrize("family", ["butterworth", "chebyshev1", "chebyshev2", "elliptic"])
    def test_even_order_responses_have_even_coefficients(self, family):
        for order in (2, 4, 6, 8):
            r = composed(family, order)
            for coeffs in (r.num_coeffs, r.den_coeffs):
                if len(coeffs) < 2:
                    continue
                scale = np.max(np.abs(coeffs))
                assert np.max(np.abs(coeffs[1::2])) < 1e-9 * scale

    def test_denominator_constant_term_is_one(self):
        for family in ("butterworth", "chebyshev1", "chebyshev2", "elliptic"):
            r = composed(family, 5)
            assert r.den_coeffs[0] == pytest.approx(1.0, rel=1e-12)
            assert r.num_coeffs[0] == pytest.approx(1.0, rel=1e-12)


class TestOracleEquivalence:
    @pytest.mark.parametrize("family", ["butterworth", "chebyshev1", "chebyshev2", "elliptic"])
    @pytest.mark.parametrize("order", range(1, 9))
    def test_matches_direct_formula(self, family, order):
        r = composed(family, order)
        h = evaluate_response(r, GRID)
        ref = oracle(family, order, GRID)
        np.testing.assert_allclose(h, ref, rtol=1e-8)

    def test_cheb1_n6_interior_point(self):
        r = composed("chebyshev1", 6)
        c6 = oracles.chebyshev_poly(6, np.array([0.5]))[0]
        want = 1.0 / (1.0 + RIPPLE.eps_p**2 * c6 * c6)
        assert evaluate_response(r, 0.5) == pytest.approx(want, rel=1e-10)

    def test_coefficient_form_cross_check(self):
        # the coefficient form cancels near transfer zeros, hence the small
        # absolute floor on top of the relative tolerance
        for family in ("butterworth", "chebyshev1", "chebyshev2", "elliptic"):
            r = composed(family, 6)
            lam = np.linspace(0.0, 2.0, 50)
            np.testing.assert_allclose(
                evaluate_response(r, lam),
                evaluate_response_coeffs(r, lam),
                rtol=1e-9,
                atol=1e-10,
            )


class TestEvaluation:
    def test_passband_edge_value(self):
        for family in ("butterworth", "chebyshev1", "elliptic"):
            for order in (3, 4):
                r = composed(family, order)
                assert evaluate_response(r, 1.0) == pytest.approx(
                    1.0 / (1.0 + RIPPLE.eps_p**2), rel=1e-9
                )

    def test_lambda_zero(self):
        assert evaluate_response(composed("butterworth", 5), 0.0) == 1.0
        assert evaluate_response(composed("chebyshev2", 5), 0.0) == 1.0

    def test_infinity_limits(self):
        # zero-deficient responses decay to 0; equal-degree ones to the floor
        assert evaluate_response(composed("butterworth", 4), math.inf) == 0.0
        assert evaluate_response(composed("elliptic", 5), math.inf) == 0.0
        floor = evaluate_response(composed("elliptic", 4), math.inf)
        assert 0.0 < floor <= 1.0 / (1.0 + RIPPLE.eps_s**2) * 1.001

    def test_butterworth_monotone(self):
        # flat response: nonincreasing everywhere (the plateau near 0 is flat
        # to the ulp), strictly decreasing once the rolloff is resolvable
        r = composed("butterworth", 7)
        h = evaluate_response(r, np.linspace(0.0, 4.0, 800))
        assert np.all(np.diff(h) <= 1e-15)
        tail = h[np.linspace(0.0, 4.0, 800) > 0.5]
        assert np.all(np.diff(tail) < 0)

    def test_nonnegative(self):
        for family in ("chebyshev2", "elliptic"):
            h = evaluate_response(composed(family, 6), GRID)
            assert np.all(h >= 0.0)

    def test_identity_response(self):
        r = identity_response()
        assert evaluate_response(r, 1.3) == 1.0
        assert attenuation_db(r, 0.7) == 0.0


class TestAttenuation:
    def test_zero_db_at_origin_for_monotone_families(self):
        assert attenuation_db(composed("butterworth", 6), 0.0) == pytest.approx(0.0, abs=1e-12)
        assert attenuation_db(composed("chebyshev2", 5), 0.0) == pytest.approx(0.0, abs=1e-12)

    def test_edges_meet_targets(self):
        for family in ("butterworth", "chebyshev1", "chebyshev2", "elliptic"):
            order = {"butterworth": 16, "chebyshev1": 6, "chebyshev2": 6, "elliptic": 4}[family]
            r = composed(family, order)
            att_p = attenuation_db(r, 1.0) if family != "chebyshev2" else attenuation_db(r, 1.0)
            assert att_p <= 1.0 + 1e-5, family
            assert attenuation_db(r, 1.2) >= 30.0 - 1e-5, family
        for family in ("chebyshev1", "elliptic"):
            order = 6 if family == "chebyshev1" else 4
            assert attenuation_db(composed(family, order), 1.0) == pytest.approx(1.0, abs=1e-4)

    def test_transfer_zero_is_infinite(self):
        r = composed("chebyshev2", 4)
        z = r.pole_zero.positive_zeros[0]
        assert attenuation_db(r, float(z)) == math.inf

    def test_cheb1_passband_equiripple(self):
        r = composed("chebyshev1", 6)
        att = attenuation_db(r, np.linspace(0.0, 1.0, 6001))
        peaks = [att[i] for i in range(1, 6000) if att[i] > att[i - 1] and att[i] > att[i + 1]]
        assert len(peaks) >= 2
        np.testing.assert_allclose(peaks, 1.0, atol=1e-4)

    def test_elliptic_stopband_equiripple(self):
        r = composed("elliptic", 4)
        adj = adjust_modulus_elliptic(4, RIPPLE.k1)
        lam_s_eff = 1.0 / adj.k
        att = attenuation_db(r, np.linspace(lam_s_eff, 2.0, 8001))
        dips = [att[i] for i in range(1, 8000) if att[i] < att[i - 1] and att[i] < att[i + 1]]
        assert len(dips) >= 1
        np.testing.assert_allclose(dips, 30.0, atol=1e-3)


class TestStability:
    def test_no_denominator_sign_change(self):
        lam = np.linspace(-2.5, 2.5, 1001)
        for family in ("butterworth", "chebyshev1", "chebyshev2", "elliptic"):
            r = composed(family, 6)
            den = np.ones_like(lam)
            for p in r.pole_zero.upper_poles:
                a = abs(p) ** 2
                den *= 1.0 - 2.0 * lam * p.real / a + lam * lam / a
            assert np.all(den > 0.0), family
            assert np.min(np.abs(r.pole_zero.poles.imag)) > 1e-9


class TestLargeOrder:
    def test_order_455_cascade_evaluation(self):
        sharp = ripple_from_attenuation(0.1, 40.0)
        r = compose_conjugate(poles_butterworth(455, sharp.eps_p, 1.0))
        assert len(r.pole_zero.poles) == 910
        assert len(r.den_coeffs) == 911
        assert attenuation_db(r, 1.0) == pytest.approx(0.1, abs=1e-9)
        assert attenuation_db(r, 1.01) >= 40.0
        assert evaluate_response(r, 0.0) == 1.0
