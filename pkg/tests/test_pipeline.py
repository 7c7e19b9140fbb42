"""
单圈量子能量流程单元测试
One-Loop Quantum Energy Pipeline Unit Tests
"""

import logging
import math

import pytest
from scipy.constants import electron_volt

from kink_quantum.config import BUNDLED_DB_PATH
from kink_quantum.database import load_materials
from kink_quantum.models import ModelMode, ModelParams, RegularizationParams
from kink_quantum.parameters import derive_params
from kink_quantum.semiclassic import (
    QuantumEnergyPipeline, quantum_correction, quantum_energy_pipeline, reference_chain_check,
    subtracted_trace_laplace
)
from kink_quantum.semiclassic.pipeline import CHAIN_TOLERANCE
from kink_quantum.sine_gordon import classical_energy

TIME_SCALES = [1e-15, 1e-14, 1e-13, 1e-12, 1e-11, 1e-10, 1e-9, 1e-8, 1e-7, 1e-6]


@pytest.fixture(scope="module")
def crowdion_params():
    return {m.name: derive_params(m, ModelMode.CROWDION) for m in load_materials(BUNDLED_DB_PATH)}


@pytest.fixture
def fresh_chain_cache():
    reference_chain_check.cache_clear()
    yield
    reference_chain_check.cache_clear()


class TestQuantumCorrection:
    """闭式量子修正测试类"""

    def test_silver(self, crowdion_params):
        """测试 Ag 挤列子修正 0.0034 eV"""
        assert quantum_correction(crowdion_params["Ag"]) / electron_volt == pytest.approx(0.0034, abs=1e-4)

    def test_synthetic(self):
        """测试 ħ=1 时 ΔE = √(2ε/(a²M))"""
        params = ModelParams(G=1.0, epsilon=0.5, a=1.0, atom_mass=1.0)
        assert quantum_correction(params, hbar=1.0) == pytest.approx(1.0)

    def test_ratio_scale(self, crowdion_params):
        """测试修正比经典能量低约四个数量级"""
        for params in crowdion_params.values():
            ratio = quantum_correction(params) / classical_energy(params)
            assert 1e-4 <= ratio <= 1e-3


class TestQuantumEnergyPipeline:
    """完整流程测试类"""

    @pytest.mark.parametrize("T", TIME_SCALES)
    def test_tied_matches_closed_form(self, crowdion_params, T):
        """测试 r² = εT/ħ 时 E_q = E_c + ħ√(2ε/(a²M)), 与 T 无关"""
        params = crowdion_params["Ag"]
        reg = RegularizationParams.tied(params, T)
        expected = classical_energy(params) + quantum_correction(params)
        assert quantum_energy_pipeline(params, reg) == pytest.approx(expected, rel=1e-10)

    def test_correction_resolved(self, crowdion_params):
        """测试修正本身精确到 1e-8"""
        for params in crowdion_params.values():
            result = QuantumEnergyPipeline(params, RegularizationParams.tied(params, 1e-12)).evaluate()
            assert result.correction == pytest.approx(quantum_correction(params), rel=1e-8)
            assert result.imaginary_residue < 1e-10 * abs(result.energy)

    def test_zeta_at_zero_is_imaginary(self, crowdion_params):
        """测试物理相位下 ζ(0) 为纯虚数"""
        params = crowdion_params["Fe"]
        result = QuantumEnergyPipeline(params, RegularizationParams.tied(params, 1e-12)).evaluate()
        assert abs(result.zeta0.real) < 1e-12 * abs(result.zeta0)
        assert result.zeta0.imag > 0

    def test_rescaling_shift(self, crowdion_params):
        """测试改变 r 只通过 ln r·ζ(0) 项影响能量"""
        params = crowdion_params["Cu"]
        tied = RegularizationParams.tied(params, 1e-12)
        pipeline = QuantumEnergyPipeline(params, tied)
        base = pipeline.evaluate().energy
        for factor in (0.5, 3.0):
            shifted = QuantumEnergyPipeline(params, tied.with_r(tied.r * factor)).evaluate().energy
            assert shifted - base == pytest.approx(pipeline.rescaling_shift(factor), rel=1e-8)

    def test_untied_differs(self, crowdion_params):
        """测试 r 取绑定值的 e 倍时单圈修正恰好抵消"""
        params = crowdion_params["Ag"]
        reg = RegularizationParams.untied(params, 1e-12, math.e)
        energy = quantum_energy_pipeline(params, reg)
        assert energy - classical_energy(params) == pytest.approx(0.0, abs=1e-8 * quantum_correction(params))

    def test_heat_trace_factorizes(self):
        """测试 τ 积分表示与 γ 分解一致"""
        params = ModelParams(G=1.0, epsilon=0.1, a=1.0, atom_mass=1.0)
        pipeline = QuantumEnergyPipeline(params, RegularizationParams(T=2 * math.pi, r=1.0, hbar=1.0))
        for y in (0.001, 0.05, 1.0):
            assert pipeline.heat_trace(y) == pytest.approx(pipeline.factorized_heat_trace(y), rel=1e-10)

    def test_gamma_hat(self, crowdion_params):
        """测试减除迹的 Laplace 像"""
        params = crowdion_params["Mg"]
        pipeline = QuantumEnergyPipeline(params, RegularizationParams.tied(params, 1e-12))
        assert pipeline.gamma_hat(-0.3) == subtracted_trace_laplace(-0.3, params.m_dimless)

    def test_requires_positive_epsilon(self):
        """测试 ε = 0 无法计算"""
        params = ModelParams(G=1.0, epsilon=0.0, a=1.0, atom_mass=1.0)
        with pytest.raises(ValueError, match="ε"):
            QuantumEnergyPipeline(params, RegularizationParams(T=1.0, r=1.0))

    def test_inconsistent_phase_warns(self, crowdion_params, caplog):
        """测试相位约定不一致时给出警告"""
        params = crowdion_params["Ag"]
        pipeline = QuantumEnergyPipeline(params, RegularizationParams.tied(params, 1e-12))
        pipeline.prefactors = pipeline.prefactors.euclidean()
        with caplog.at_level(logging.WARNING):
            pipeline.evaluate()
        assert "虚部" in caplog.text


class TestMellinChainCheck:
    """数值 Mellin 链校验测试类"""

    def test_evaluate_runs_chain(self, crowdion_params):
        """测试完整流程经过数值链且与闭式一致"""
        params = crowdion_params["Ag"]
        result = QuantumEnergyPipeline(params, RegularizationParams.tied(params, 1e-12)).evaluate()
        assert result.chain_deviation is not None
        assert result.chain_deviation < CHAIN_TOLERANCE

    @pytest.mark.parametrize("m", [0.3, 1.0, 2.5])
    def test_reference_chain(self, m):
        """测试不同波数下 γ̂₁, ζ(0), ζ′(0) 的数值值与闭式一致"""
        assert reference_chain_check(m) < CHAIN_TOLERANCE

    def test_chain_can_be_skipped(self):
        """测试关闭校验"""
        params = ModelParams(G=1.0, epsilon=0.1, a=1.0, atom_mass=1.0)
        pipeline = QuantumEnergyPipeline(params, RegularizationParams(T=1.0, r=1.0, hbar=1.0),
                                         verify_chain=False)
        assert pipeline.evaluate().chain_deviation is None

    def test_mismatch_warns(self, mocker, caplog, fresh_chain_cache):
        """测试数值链与闭式不符时给出警告"""
        mocker.patch('kink_quantum.semiclassic.pipeline.mellin_zeta', return_value=0.0)
        params = ModelParams(G=1.0, epsilon=0.1, a=1.0, atom_mass=1.0)
        pipeline = QuantumEnergyPipeline(params, RegularizationParams(T=2 * math.pi, r=1.0, hbar=1.0))
        with caplog.at_level(logging.WARNING):
            result = pipeline.evaluate()
        assert result.chain_deviation == pytest.approx(1.0)
        assert "Mellin" in caplog.text
