import math

import pytest

from superosc.combinat import pochhammer
from superosc.exact import ExpSeries, Poly, Rat, series_exp_linear
from superosc.hyper import (
    HyperSpec,
    exp_moment_series,
    kummer_integral,
    miller_paris_lhs,
    miller_paris_rhs,
    pfq_eval_float,
    pfq_series,
)

HALF_1_PLUS_X = Poly([Rat(1, 2), Rat(1, 2)])


class TestHyperSpec:
    def test_rejects_nonpositive_integer_lower(self):
        with pytest.raises(ValueError):
            HyperSpec((1,), (0,))
        with pytest.raises(ValueError):
            HyperSpec((1,), (-2,))

    def test_accepts_negative_non_integers(self):
        spec = HyperSpec((Rat(-1, 2),), (Rat(-3, 2),))
        assert spec.p == 1 and spec.q == 1


class TestPfqSeries:
    def test_empty_parameters_is_exponential(self):
        spec = HyperSpec((), ())
        z = Poly([Rat(2, 3), Rat(1, 5)])
        assert pfq_series(spec, z, 7) == series_exp_linear(z, 7)

    def test_kummer_ratio_telescopes(self):
        # upper k over lower k+1: coefficient m is k/(k+m) * z^m
        z = HALF_1_PLUS_X
        for k in range(1, 5):
            series = pfq_series(HyperSpec((k,), (k + 1,)), z, 8)
            for m in range(9):
                assert series.coefficient(m) == z**m * Rat(k, k + m)

    def test_coefficients_from_pochhammer_products(self):
        # independent recomputation straight from the rising factorials
        spec = HyperSpec((Rat(3), Rat(1, 2)), (Rat(5, 2), Rat(2)))
        z = Poly([Rat(1), Rat(-1, 3)])
        series = pfq_series(spec, z, 6)
        for m in range(7):
            ratio = (
                pochhammer(Rat(3), m)
                * pochhammer(Rat(1, 2), m)
                / (pochhammer(Rat(5, 2), m) * pochhammer(Rat(2), m))
            )
            assert series.coefficient(m) == z**m * ratio


class TestPfqEvalFloat:
    def test_exponential(self):
        assert pfq_eval_float(HyperSpec((), ()), 1.0, 1e-14) == pytest.approx(
            math.e, abs=1e-13
        )

    def test_closed_form_1f1_1_2(self):
        # 1F1(1;2;z) = (e^z - 1)/z
        value = pfq_eval_float(HyperSpec((1,), (2,)), 2.0, 1e-14)
        assert value == pytest.approx(math.expm1(2.0) / 2.0, abs=1e-12)

    def test_terminating_series(self):
        # 1F1(-1; 1/2; z^2) = 1 - 2 z^2, exact at z = 1
        value = pfq_eval_float(HyperSpec((-1,), (Rat(1, 2),)), 1.0, 1e-14)
        assert value == -1.0

    def test_rejects_p_greater_than_q(self):
        with pytest.raises(ValueError):
            pfq_eval_float(HyperSpec((1, 2), (3,)), 0.5, 1e-10)

    def test_rejects_bad_tolerance(self):
        with pytest.raises(ValueError):
            pfq_eval_float(HyperSpec((), ()), 1.0, 0.0)


class TestKummerIntegral:
    def test_frozen_value(self):
        # mu=2, sigma=3, u=1: 2 * int_0^1 w e^w dw = 2
        assert kummer_integral(2, 3, 1.0) == pytest.approx(2.0, abs=1e-10)

    def test_value_at_zero(self):
        for k in range(1, 6):
            assert kummer_integral(k, k + 1, 0.0) == pytest.approx(1.0, abs=1e-12)

    def test_agrees_with_series(self):
        for k in range(1, 6):
            spec = HyperSpec((k,), (k + 1,))
            for u in range(-4, 5):
                quad_val = kummer_integral(k, k + 1, float(u))
                series_val = pfq_eval_float(spec, float(u), 1e-14)
                assert abs(quad_val - series_val) <= 1e-9, (k, u)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            kummer_integral(3, 2, 1.0)  # sigma <= mu
        with pytest.raises(ValueError):
            kummer_integral(Rat(1, 2), 2, 1.0)  # mu < 1 unsupported


class TestTruncationVsFloat:
    def test_series_evaluation_within_tail_bound(self):
        # entire case, Pochhammer ratio <= 1, so the dropped tail is at
        # most sum_{m>V} |z|^m/m! <= e^{|z|} |z|^(V+1)/(V+1)!
        order = 12
        x = Rat(1, 3)
        for k in (1, 2, 3):
            spec = HyperSpec((k,), (k + 1,))
            series = pfq_series(spec, HALF_1_PLUS_X, order)
            for t in (Rat(1, 2), Rat(3, 2), Rat(-3), Rat(3)):
                z = float(HALF_1_PLUS_X(x) * t)
                assert abs(z) <= 2.0
                exact = float(series.evaluate(x, t))
                floatval = pfq_eval_float(spec, z, 1e-15)
                tail = (
                    math.exp(abs(z))
                    * abs(z) ** (order + 1)
                    / math.factorial(order + 1)
                )
                assert abs(exact - floatval) <= tail + 1e-12, (k, t)


class TestExpMomentSeries:
    def test_coefficients(self):
        z = HALF_1_PLUS_X
        s = exp_moment_series(2, 6, z, 1)
        for v in range(7):
            assert s.coefficient(v) == z**v * Rat(1, v + 2)
        s2 = exp_moment_series(2, 6, z, 2)
        for v in range(7):
            assert s2.coefficient(v) == z**v * Rat(1, (v + 2) ** 2)

    def test_rejects_k_zero(self):
        with pytest.raises(ValueError):
            exp_moment_series(0, 4, HALF_1_PLUS_X, 1)

    def test_matches_quadrature(self):
        # the power=1 series really is int_0^1 e^{z t u} u^{k-1} du
        from scipy.integrate import quad

        k = 3
        x, t = Rat(1, 3), Rat(1, 2)
        series = exp_moment_series(k, 20, HALF_1_PLUS_X, 1)
        zt = float(HALF_1_PLUS_X(x) * t)
        expected, _ = quad(lambda u: math.exp(zt * u) * u ** (k - 1), 0.0, 1.0)
        assert float(series.evaluate(x, t)) == pytest.approx(expected, abs=1e-12)


class TestMillerParis:
    def test_general_identity_exact(self):
        for zscale in (Poly([1]), HALF_1_PLUS_X):
            for a in range(4):
                for c in range(1, 5):
                    lhs = miller_paris_lhs(a, c, 12, zscale)
                    rhs = miller_paris_rhs(a, c, "general", 12, zscale)
                    assert lhs == rhs, (a, c)

    def test_c_equals_one_variant(self):
        for a in range(4):
            lhs = miller_paris_lhs(a, 1, 12)
            rhs = miller_paris_rhs(a, 1, "c_equals_1", 12)
            assert lhs == rhs
            assert rhs == miller_paris_rhs(a, 1, "general", 12)

    def test_a_zero_is_exponential(self):
        assert miller_paris_rhs(0, 3, "general", 6) == series_exp_linear(Poly([1]), 6)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            miller_paris_rhs(2, 0, "general", 6)
        with pytest.raises(ValueError):
            miller_paris_rhs(2, 2, "c_equals_1", 6)
        with pytest.raises(ValueError):
            miller_paris_rhs(2, 1, "nope", 6)
