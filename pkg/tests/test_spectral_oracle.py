"""
有限差分谱校验单元测试
Finite-Difference Spectral Oracle Unit Tests
"""

import logging
import math

import numpy as np
import pytest
from scipy.special import erf

from kink_quantum.exceptions import DomainError
from kink_quantum.models.operator import DiscreteOperator
from kink_quantum.semiclassic import kink_resolvent
from kink_quantum.spectral_oracle import (
    SpectralOracle, build_operators, count_below, eigen_spectrum, numerical_resolvent_diag,
    vacuum_potential
)


@pytest.fixture(scope="module")
def oracle():
    return SpectralOracle(half_width=30.0, grid_step=0.01)


@pytest.fixture(scope="module")
def fine_oracle():
    return SpectralOracle(half_width=30.0, grid_step=0.005)


class TestDiscreteOperator:
    """离散算子测试类"""

    def test_grid(self):
        """测试内部格点"""
        op = DiscreteOperator.on_grid(vacuum_potential(1.0), 1.0, 0.25)
        assert op.n_points == 7
        assert np.allclose(op.grid, [-0.75, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75])
        assert np.allclose(op.to_dense(), op.to_dense().T)

    def test_inconsistent_grid(self):
        """测试格点数与区间不符"""
        with pytest.raises(ValueError):
            DiscreteOperator(grid_step=0.1, n_points=5, potential=np.zeros(5), domain_half_width=10.0)

    def test_box_spectrum(self):
        """测试真空算子的低能谱为 m² + (jπ/2L)²"""
        _, vacuum = build_operators(1.0, 10.0, 0.01)
        spectrum = eigen_spectrum(vacuum)
        expected = [1.0 + (j * math.pi / 20.0) ** 2 for j in range(1, 6)]
        assert list(spectrum[:5]) == pytest.approx(expected, rel=1e-4)

    def test_zero_mode(self):
        """测试扭结算子存在零模"""
        kink, _ = build_operators(1.0, 15.0, 0.01)
        assert abs(eigen_spectrum(kink)[0]) < 1e-3

    def test_invalid_wavenumber(self):
        """测试非正波数"""
        with pytest.raises(DomainError):
            build_operators(0.0, 10.0, 0.1)

    def test_count_below(self):
        """测试计数"""
        assert count_below(np.array([-1.0, 0.5, 1.0, 2.0]), 1.0) == 2


class TestSpectralOracle:
    """谱校验服务测试类"""

    @pytest.mark.parametrize("t", [0.1, 0.25, 1.0, 4.0, 10.0])
    def test_heat_trace(self, oracle, t):
        """测试减除热迹与 erf(m√t) 相符"""
        assert oracle.heat_trace_diff(t, 1.0) == pytest.approx(erf(math.sqrt(t)), rel=1e-2)

    def test_refinement_reduces_error(self, oracle, fine_oracle):
        """测试步长减半后热迹误差减小"""
        for t in (0.1, 0.25, 1.0):
            exact = erf(math.sqrt(t))
            coarse_error = abs(oracle.heat_trace_diff(t, 1.0) - exact)
            fine_error = abs(fine_oracle.heat_trace_diff(t, 1.0) - exact)
            assert fine_error < coarse_error

    def test_bound_state_count(self, oracle):
        """测试连续谱阈值下方只有零模"""
        assert oracle.bound_state_count(1.0) == 1

    def test_spectra_cached(self, oracle):
        """测试谱按 m 缓存"""
        assert oracle.spectra(1.0) is oracle.spectra(1.0)

    def test_non_positive_time(self, oracle):
        """测试 t ≤ 0"""
        with pytest.raises(DomainError):
            oracle.heat_trace_diff(0.0, 1.0)

    def test_truncation_warning(self, caplog):
        """测试网格过粗时给出截断警告"""
        coarse = SpectralOracle(half_width=10.0, grid_step=0.5)
        with caplog.at_level(logging.WARNING):
            coarse.heat_trace_diff(1.0, 1.0)
        assert "网格过粗" in caplog.text

    def test_invalid_grid(self):
        """测试无效网格参数"""
        with pytest.raises(DomainError):
            SpectralOracle(half_width=0.01, grid_step=0.1)


class TestNumericalResolvent:
    """数值预解式测试类"""

    @pytest.mark.parametrize("p", [-0.5, -1.0, -2.0, -4.0])
    def test_matches_closed_form(self, p):
        """测试与 k=1 闭式预解式一致"""
        for x in (-2.0, -0.5, 0.0, 0.7, 3.0):
            numeric = numerical_resolvent_diag(p, x, 1.0)
            assert numeric == pytest.approx(kink_resolvent(p, x, 1.0), rel=1e-6)

    def test_oracle_delegates(self, oracle):
        """测试服务对象使用自身网格"""
        assert oracle.numerical_resolvent_diag(-1.0, 0.3, 1.0) == numerical_resolvent_diag(-1.0, 0.3, 1.0)

    def test_requires_negative_p(self):
        """测试 p ≥ 0"""
        with pytest.raises(DomainError):
            numerical_resolvent_diag(0.0, 0.0, 1.0)
