"""
对角预解式单元测试
Diagonal Resolvent Unit Tests
"""

import math

import numpy as np
import pytest
import sympy
from scipy.integrate import quad
from scipy.special import erf

from kink_quantum.exceptions import DomainError, SingularityError
from kink_quantum.models import EllipticSolution
from kink_quantum.semiclassic import (
    hermit_residual, kink_resolvent, ode_residual, resolvent_derivatives, resolvent_polynomials,
    resolvent_value, subtracted_trace_laplace, subtracted_trace_quadrature,
    symbolic_hermit_identity, vacuum_resolvent
)
from kink_quantum.sine_gordon import potential_U

MODULI = [0.1, 0.3, 0.5, 0.7, 0.9, 1.0]
P_FACTORS = [-3.0, -1.7, -0.45, -0.05, 0.15, 0.35, 0.62, 0.88, 1.4, 2.6]


class TestResolventPolynomials:
    """预解式多项式测试类"""

    def test_kink_roots(self):
        """测试 k=1 时 Q = −p²(p − m²)"""
        res = resolvent_polynomials(1.0, 2.0)
        assert res.Q_roots == pytest.approx((0.0, 4.0, 0.0))
        for p in (-1.5, 0.7, 6.0):
            assert res.Q(p) == pytest.approx(-p * p * (p - 4.0), rel=1e-14)

    def test_general_roots(self):
        """测试 Q 的三个根"""
        res = resolvent_polynomials(0.6, 1.5)
        for root in res.Q_roots:
            assert res.Q(root) == pytest.approx(0.0, abs=1e-12)
        assert res.z_coefficient == pytest.approx(-1.5 ** 2 * 0.36)

    def test_invalid_arguments(self):
        """测试定义域"""
        with pytest.raises(DomainError):
            resolvent_polynomials(1.2, 1.0)
        with pytest.raises(DomainError):
            resolvent_polynomials(0.5, 0.0)


class TestHermitResidual:
    """Hermit 型方程残差测试类"""

    @pytest.mark.parametrize("k", MODULI)
    def test_residual_grid(self, k):
        """测试 (k, p, x) 网格上残差小于 1e-10"""
        m = 1.3
        res = resolvent_polynomials(k, m)
        x = np.linspace(-3.0, 3.0, 10) / m
        for factor in P_FACTORS:
            residual = hermit_residual(res, factor * m * m, x)
            assert np.max(np.abs(residual)) < 1e-10

    def test_singular_parameter(self):
        """测试 p 接近 Q 的根"""
        res = resolvent_polynomials(0.5, 1.0)
        with pytest.raises(SingularityError):
            hermit_residual(res, 0.25 + 1e-9, 0.3)
        with pytest.raises(SingularityError):
            hermit_residual(res, 0.0, 0.3)

    def test_symbolic_identity(self):
        """测试符号恒等式"""
        assert symbolic_hermit_identity() == 0
        assert sympy.simplify(symbolic_hermit_identity()) == 0

    def test_ode_residual_from_derivatives(self):
        """测试解析导数代入方程"""
        m, k, p = 1.1, 0.6, -0.8
        res = resolvent_polynomials(k, m)
        sol = EllipticSolution(k=k, m=m)
        x = np.linspace(-2.0, 2.0, 9)
        G, dG, d2G = resolvent_derivatives(res, p, x)
        residual = ode_residual(G, dG, d2G, potential_U(x, sol), p)
        np.testing.assert_allclose(residual, 0.0, atol=1e-12)

    def test_derivative_matches_finite_difference(self):
        """测试 G′ 与中心差分一致"""
        res = resolvent_polynomials(0.8, 1.0)
        p, x, h = -0.6, 0.4, 1e-6
        _, dG, _ = resolvent_derivatives(res, p, x)
        numeric = (resolvent_value(res, p, x + h) - resolvent_value(res, p, x - h)) / (2 * h)
        assert dG == pytest.approx(numeric, rel=1e-6)


class TestKinkResolvent:
    """k=1 闭式测试类"""

    def test_polynomial_form_matches_closed_form(self):
        """测试 P/(2√Q) 与闭式一致"""
        m = 0.9
        res = resolvent_polynomials(1.0, m)
        x = np.linspace(-5.0, 5.0, 21)
        for p in (-0.1, -0.81, -3.0):
            np.testing.assert_allclose(resolvent_value(res, p, x), kink_resolvent(p, x, m), rtol=1e-13)

    def test_center_value(self):
        """测试 p=−m², x=0 时 G = 1/(m√2)"""
        m = 1.7
        assert kink_resolvent(-m * m, 0.0, m) == pytest.approx(1 / (m * math.sqrt(2)), rel=1e-14)

    def test_far_field_is_vacuum(self):
        """测试远处趋于真空值 1/(2√5 m)"""
        m = 1.2
        assert kink_resolvent(-4 * m * m, 40.0 / m, m) == pytest.approx(
            1 / (2 * math.sqrt(5) * m), rel=1e-14)
        assert vacuum_resolvent(-4 * m * m, m) == pytest.approx(1 / (2 * math.sqrt(5) * m))

    def test_vacuum_solves_ode(self):
        """测试常数势的预解式满足方程"""
        G = vacuum_resolvent(-0.5, 1.0)
        assert ode_residual(G, 0.0, 0.0, 1.0, -0.5) == pytest.approx(0.0, abs=1e-15)


class TestSubtractedTrace:
    """减除迹测试类"""

    @pytest.mark.parametrize("p", [-0.2, -1.0, -5.0])
    def test_quadrature_matches_closed_form(self, p):
        """测试数值积分与 −m/(p√(m²−p)) 一致"""
        m = 1.4
        assert subtracted_trace_quadrature(p, m) == pytest.approx(subtracted_trace_laplace(p, m), rel=1e-9)

    def test_laplace_transform_of_error_function(self):
        """测试其为 erf(m√t) 的 Laplace 变换"""
        m, p = 1.0, -0.7
        value, _ = quad(lambda t: math.exp(p * t) * erf(m * math.sqrt(t)), 0.0, np.inf,
                        epsabs=0.0, epsrel=1e-12, limit=200)
        assert value == pytest.approx(subtracted_trace_laplace(p, m), rel=1e-8)

    def test_requires_negative_parameter(self):
        """测试 p 必须为负"""
        with pytest.raises(DomainError):
            subtracted_trace_laplace(0.5, 1.0)
