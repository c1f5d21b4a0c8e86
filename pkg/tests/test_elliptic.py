"""Special-function suite: AGM integral, Jacobi functions, inverses, and the
degree-equation modulus adjustments.

Frozen reference values were computed with mpmath at 30+ digits; a handful of
live mpmath comparisons guard against regressions in the Landen recursion.
"""

import math

import mpmath as mp
import numpy as np
import pytest

from graphfilt.elliptic import (
    Modulus,
    adjust_modulus_cheb2,
    adjust_modulus_elliptic,
    complete_elliptic_k,
    inverse_cd,
    inverse_sn,
    jacobi_cd,
    jacobi_sn_cn_dn,
)
from graphfilt.errors import DomainError

mp.mp.dps = 30

# ripple parameters of the recurring test designs
EPS_P_DEFAULT = 0.34931140018894808   # rp = 1 dB
EPS_S_DEFAULT = 5.5337850158534162    # as = 30 dB
K1_DEFAULT = 0.06312341357465574
K1_SHARP = 0.010814998124984586       # rp = 0.1 dB, as = 40 dB


class TestCompleteEllipticK:
    def test_k_zero_is_exactly_half_pi(self):
        assert complete_elliptic_k(0.0) == math.pi / 2

    def test_frozen_values(self):
        # mpmath.ellipk(m=k^2) at 30 digits
        assert complete_elliptic_k(1 / math.sqrt(2)) == pytest.approx(
            1.8540746773013719, rel=1e-12
        )
        assert complete_elliptic_k(0.8333333) == pytest.approx(
            2.0672548511610835, rel=1e-12
        )
        assert complete_elliptic_k(0.6) == pytest.approx(1.7507538029157525, rel=1e-12)

    def test_strictly_increasing(self):
        ks = np.linspace(0.0, 0.999, 200)
        vals = [complete_elliptic_k(k) for k in ks]
        assert np.all(np.diff(vals) > 0)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            complete_elliptic_k(1.0)
        with pytest.raises(DomainError):
            complete_elliptic_k(-0.1)
        with pytest.raises(DomainError):
            complete_elliptic_k(1.5)

    def test_matches_mpmath_on_grid(self):
        for k in np.linspace(0.05, 0.995, 20):
            ref = float(mp.ellipk(mp.mpf(float(k)) ** 2))
            assert complete_elliptic_k(float(k)) == pytest.approx(ref, rel=1e-14)


class TestModulus:
    def test_pair_consistency(self):
        m = Modulus.from_k(0.8)
        assert m.k**2 + m.k_comp**2 == pytest.approx(1.0, abs=1e-15)
        assert m.complement.k == m.k_comp

    def test_from_comp_keeps_precision_near_one(self):
        m = Modulus.from_comp(1e-9)
        assert m.k_comp == 1e-9
        # K is finite and reflects the tiny complement even though k rounds to 1
        assert complete_elliptic_k(m) > 20.0

    def test_invalid(self):
        with pytest.raises(DomainError):
            Modulus.from_k(1.0)
        with pytest.raises(DomainError):
            Modulus.from_comp(0.0)
        with pytest.raises(DomainError):
            Modulus(0.9, 0.9)


class TestJacobiFunctions:
    def test_trig_degeneration_k0(self):
        s, c, d = jacobi_sn_cn_dn(math.pi / 6, 0.0)
        assert s.real == pytest.approx(0.5, abs=1e-15)
        assert c.real == pytest.approx(math.cos(math.pi / 6), abs=1e-15)
        assert abs(d - 1.0) < 1e-15
        for u in np.linspace(-3, 3, 25):
            s, c, _ = jacobi_sn_cn_dn(float(u), 0.0)
            assert s.real == pytest.approx(math.sin(u), abs=1e-12)
            assert jacobi_cd(float(u), 0.0).real == pytest.approx(math.cos(u), abs=1e-12)

    def test_hyperbolic_limit_near_k1(self):
        mod = Modulus.from_comp(1e-6)
        for u in np.linspace(-2, 2, 17):
            s, _, _ = jacobi_sn_cn_dn(float(u), mod)
            assert s.real == pytest.approx(math.tanh(u), abs=1e-9)

    def test_quarter_period(self):
        k = 0.6
        big_k = complete_elliptic_k(k)
        s, c, d = jacobi_sn_cn_dn(big_k, k)
        assert s.real == pytest.approx(1.0, abs=1e-12)
        assert abs(c) < 1e-12
        assert d.real == pytest.approx(0.8, abs=1e-12)

    def test_frozen_real_point(self):
        s, c, d = jacobi_sn_cn_dn(0.8, 0.9)
        assert s.real == pytest.approx(0.6743070571825298, rel=1e-12)
        assert c.real == pytest.approx(0.7384510766691565, rel=1e-12)
        assert d.real == pytest.approx(0.7947962594485505, rel=1e-12)

    def test_frozen_complex_point(self):
        s, c, d = jacobi_sn_cn_dn(0.7 + 0.3j, 0.7)
        assert s == pytest.approx(0.6565756853514389 + 0.2116772277094621j, rel=1e-11)
        assert c == pytest.approx(0.8023231197849743 - 0.1732246241313355j, rel=1e-11)
        assert d == pytest.approx(0.9035493405510433 - 0.0753708028586656j, rel=1e-11)

    @pytest.mark.parametrize("k", [0.0, 0.3, 0.7, 0.95])
    def test_identities_real_grid(self, k):
        mod = Modulus.from_k(k)
        for u in np.linspace(-5.0, 5.0, 100):
            s, c, d = jacobi_sn_cn_dn(float(u), mod)
            assert abs(s * s + c * c - 1.0) < 1e-11
            assert abs(d * d + k * k * s * s - 1.0) < 1e-11

    @pytest.mark.parametrize("k", [0.0, 0.3, 0.7, 0.95])
    def test_identities_complex_grid(self, k):
        mod = Modulus.from_k(k)
        rng = np.random.default_rng(7)
        us = rng.uniform(-3.0, 3.0, 100) + 1j * rng.uniform(-1.5, 1.5, 100)
        for u in us:
            s, c, d = jacobi_sn_cn_dn(complex(u), mod)
            assert abs(s * s + c * c - 1.0) < 1e-11
            assert abs(d * d + k * k * s * s - 1.0) < 1e-11

    def test_matches_mpmath(self):
        for k in (0.3, 0.8, 0.99):
            m = mp.mpf(k) ** 2
            for u in (0.4, 1.3, 0.9 + 0.7j, -1.1 + 0.4j):
                s, c, d = jacobi_sn_cn_dn(u, k)
                assert s == pytest.approx(complex(mp.ellipfun("sn", u, m=m)), abs=1e-12)
                assert c == pytest.approx(complex(mp.ellipfun("cn", u, m=m)), abs=1e-12)
                assert d == pytest.approx(complex(mp.ellipfun("dn", u, m=m)), abs=1e-12)

    def test_non_finite_argument_rejected(self):
        with pytest.raises(DomainError):
            jacobi_sn_cn_dn(float("nan"), 0.5)
        with pytest.raises(DomainError):
            jacobi_sn_cn_dn(complex(1.0, float("inf")), 0.5)


class TestJacobiCd:
    def test_endpoints(self):
        for k in (0.0, 0.4, 0.9):
            assert jacobi_cd(0.0, k).real == pytest.approx(1.0, abs=1e-14)
            if k > 0:
                assert abs(jacobi_cd(complete_elliptic_k(k), k)) < 1e-12

    def test_interior_value_and_monotonicity(self):
        k = 0.8
        big_k = complete_elliptic_k(k)
        mid = jacobi_cd(0.5 * big_k, k).real
        assert mid == pytest.approx(0.7905694150420948, rel=1e-12)
        vals = [jacobi_cd(t * big_k, k).real for t in np.linspace(0.0, 1.0, 30)]
        assert np.all(np.diff(vals) < 0)
        assert 0.0 < mid < 1.0

    def test_pole_is_signaled(self):
        k = Modulus.from_k(0.6)
        pole = complete_elliptic_k(k) + 1j * complete_elliptic_k(k.complement)
        with pytest.raises(DomainError):
            jacobi_cd(pole, k)


class TestInverseSn:
    def test_trivial_points(self):
        assert inverse_sn(0.0, 0.5) == 0.0
        u = inverse_sn(1.0, 0.5)
        assert u.real == pytest.approx(complete_elliptic_k(0.5), rel=1e-12)
        assert abs(u.imag) < 1e-12

    @pytest.mark.parametrize("k", [0.1, 0.5, 0.9, 0.99])
    def test_round_trip_real(self, k):
        for w in np.linspace(-1.0, 1.0, 41):
            u = inverse_sn(float(w), k)
            s, _, _ = jacobi_sn_cn_dn(u, k)
            assert abs(s - w) < 1e-10

    @pytest.mark.parametrize("k", [0.1, 0.5, 0.9, 0.99])
    def test_round_trip_imaginary(self, k):
        for t in np.linspace(-10.0, 10.0, 41):
            u = inverse_sn(complex(0.0, t), k)
            assert abs(u.real) < 1e-12  # principal branch keeps the axis
            s, _, _ = jacobi_sn_cn_dn(u, k)
            assert abs(s - complex(0.0, t)) < 1e-10

    def test_pole_offset_input_is_imaginary(self):
        # the w = j/eps_p point used to place equal-ripple poles
        u = inverse_sn(1j / EPS_P_DEFAULT, K1_DEFAULT)
        assert abs(u.real) < 1e-14
        assert u.imag == pytest.approx(1.7673436707335170, rel=1e-12)

    def test_inverse_cd_round_trip(self):
        k = 0.8333333
        for w in list(np.linspace(0.01, 0.99, 15)) + [1.05, 1.15, 1.3, 2.0, 5.0]:
            u = inverse_cd(w, k)
            assert jacobi_cd(u, k) == pytest.approx(w, rel=1e-11)


class TestModulusAdjustments:
    def test_cheb2_identity_at_order_one(self):
        assert adjust_modulus_cheb2(1, 0.5).k == pytest.approx(0.5, rel=1e-14)

    def test_cheb2_frozen(self):
        assert adjust_modulus_cheb2(37, K1_SHARP).k == pytest.approx(
            0.990130163302192, rel=1e-12
        )

    def test_cheb2_sharper_than_requested(self):
        # requested selectivity 1/1.2; the order-6 adjusted value exceeds it
        adj = adjust_modulus_cheb2(6, K1_DEFAULT)
        assert 1.0 / 1.2 < adj.k < 1.0
        assert adj.k == pytest.approx(0.8544049769075811, rel=1e-12)

    def test_elliptic_identity_at_order_one(self):
        assert adjust_modulus_elliptic(1, 0.3).k == pytest.approx(0.3, rel=1e-14)

    def test_elliptic_frozen_and_sharp_enough(self):
        adj9 = adjust_modulus_elliptic(9, K1_SHARP)
        assert adj9.k == pytest.approx(0.9956333098351807, rel=1e-12)
        assert 1.0 / adj9.k <= 1.01
        adj4 = adjust_modulus_elliptic(4, K1_DEFAULT)
        assert adj4.k == pytest.approx(0.933685519145271, rel=1e-12)
        assert 1.0 / adj4.k <= 1.2

    @pytest.mark.parametrize("order,k1", [(2, 0.2), (4, K1_DEFAULT), (9, K1_SHARP), (7, 0.05)])
    def test_degree_equation_is_exact(self, order, k1):
        adj = adjust_modulus_elliptic(order, k1)
        m1 = Modulus.from_k(k1)
        ratio = (
            complete_elliptic_k(adj) * complete_elliptic_k(m1.complement)
        ) / (complete_elliptic_k(adj.complement) * complete_elliptic_k(m1))
        assert ratio == pytest.approx(order, rel=1e-10)

    @pytest.mark.parametrize("order,k1", [(4, K1_DEFAULT), (9, K1_SHARP), (5, 0.1)])
    def test_equal_ripple_identity(self, order, k1):
        # F(w) = 1 / (k1 F(1/(k w))) on the adjusted modulus, where the
        # reciprocal band lives at u + j K'/K
        adj = adjust_modulus_elliptic(order, k1)
        m1 = Modulus.from_k(k1)
        big_k = complete_elliptic_k(adj)
        big_kc = complete_elliptic_k(adj.complement)
        big_k1 = complete_elliptic_k(m1)
        for u in np.linspace(0.05, 0.95, 19):
            f = jacobi_cd(order * u * big_k1, m1)
            try:
                f_recip = jacobi_cd(order * complex(u, big_kc / big_k) * big_k1, m1)
            except DomainError:
                # reciprocal band has a pole exactly where F vanishes
                assert abs(f) < 1e-8
                continue
            assert abs(f - 1.0 / (k1 * f_recip)) < 1e-8

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            adjust_modulus_cheb2(3, 1.5)
        with pytest.raises(DomainError):
            adjust_modulus_cheb2(0, 0.5)
        with pytest.raises(DomainError):
            adjust_modulus_elliptic(0, 0.5)
