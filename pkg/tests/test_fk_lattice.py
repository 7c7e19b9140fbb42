"""
FK原子链与PN势垒单元测试
Frenkel-Kontorova Lattice and Peierls-Nabarro Barrier Unit Tests
"""

import logging
import math

import numpy as np
import pytest
from scipy.optimize import minimize

from kink_quantum.exceptions import ConvergenceError, DomainError
from kink_quantum.fk_lattice import (
    ChainRelaxer, chain_energy, chain_forces, ground_state, pn_barrier, pn_barrier_details,
    relax, required_chain_length, sg_kink_initial
)
from kink_quantum.models import ModelParams
from kink_quantum.models.chain import CenterClass, ChainState, RelaxationConfig
from kink_quantum.models.elliptic import EllipticSolution
from kink_quantum.sine_gordon import classical_energy, static_solution


def synthetic_params(m: float) -> ModelParams:
    """a = G = M = 1, ε = m²/(2π²), 使无量纲波数恰为 m"""
    return ModelParams(G=1.0, epsilon=m * m / (2.0 * math.pi ** 2), a=1.0, atom_mass=1.0)


def symmetric_minimum(n: int, p: ModelParams) -> float:
    """在 φ_{n−1−i} = 1 − φ_i 的对称子空间内直接极小化链能量"""
    initial = np.array(sg_kink_initial(n, (n - 1) / 2, p).displacements)
    middle = (n - 1) // 2 if n % 2 == 1 else n // 2
    free = np.arange(1, middle)
    mirror = n - 1 - free
    if n % 2 == 1:
        initial[middle] = 0.5

    def objective(x):
        phi = initial.copy()
        phi[free] = x
        phi[mirror] = 1.0 - x
        energy = chain_energy(ChainState(phi, (0.0, 1.0)), p)
        gradient = np.zeros(n)
        gradient[1:-1] = -p.stiffness * chain_forces(phi, p.substrate_coefficient)
        return energy, gradient[free] - gradient[mirror]

    result = minimize(objective, initial[free], jac=True, method='L-BFGS-B',
                      options={'gtol': 1e-13, 'ftol': 1e-16, 'maxiter': 20000})
    return float(result.fun)


class TestChainEnergy:
    """链能量测试类"""

    def setup_method(self):
        """测试前准备"""
        self.params = synthetic_params(1.0)

    def test_ground_state_energy(self):
        """测试基态能量为零"""
        assert chain_energy(ground_state(11), self.params) == 0.0

    def test_uniform_half_shift(self):
        """测试全部位移 1/2 时每个原子贡献 ε"""
        state = ChainState(np.full(9, 0.5), boundary=(0.5, 0.5))
        assert chain_energy(state, self.params) == pytest.approx(9 * self.params.epsilon, rel=1e-14)

    def test_forces_vanish_on_ground_state(self):
        """测试基态受力为零"""
        assert np.all(chain_forces(np.zeros(7), self.params.substrate_coefficient) == 0.0)

    def test_initial_kink_center_must_be_inside(self):
        """测试扭结中心超出链范围"""
        with pytest.raises(ValueError):
            sg_kink_initial(21, 20.0, self.params)

    def test_continuum_profile_tail(self):
        """测试半宽 30/m 处连续扭结剖面已小于 1e-9"""
        for m in (0.5, 1.0, 2.0):
            sol = EllipticSolution.kink(m)
            half_width = 30.0 / m
            assert static_solution(-half_width, sol) < 1e-9
            assert 1.0 - static_solution(half_width, sol) < 1e-9


class TestChainRelaxer:
    """弛豫器测试类"""

    def setup_method(self):
        """测试前准备"""
        self.params = synthetic_params(1.0)
        self.cfg = RelaxationConfig()
        self.relaxer = ChainRelaxer()

    def test_ground_state_is_fixed_point(self):
        """测试基态一步即收敛"""
        result = self.relaxer.relax_with_stats(ground_state(31), self.params, self.cfg)
        assert result.iterations == 1
        assert result.energy == 0.0

    def test_energy_decreases(self):
        """测试弛豫过程能量单调不增"""
        energies = []
        observer = lambda iteration, state: energies.append(chain_energy(state, self.params))  # noqa: E731
        self.relaxer.relax_with_stats(sg_kink_initial(201, 100.0, self.params), self.params,
                                      self.cfg, observer=observer)
        assert len(energies) > 10
        assert all(later <= earlier + 1e-15 for earlier, later in zip(energies, energies[1:]))

    def test_relaxed_kink_shape(self):
        """测试弛豫后扭结单调且中心原子位移为 1/2"""
        state = relax(sg_kink_initial(201, 100.0, self.params), self.params, self.cfg)
        assert state.is_monotone()
        assert state.displacements[100] == pytest.approx(0.5, abs=1e-9)
        assert state.center_class() == CenterClass.SITE

    def test_bond_centered_kink_stays_on_bond(self):
        """测试以键为中心的鞍点构型保持对称"""
        state = relax(sg_kink_initial(202, 100.5, self.params), self.params, self.cfg)
        assert state.center_position() == pytest.approx(100.5, abs=1e-9)
        assert state.center_class() == CenterClass.BOND

    def test_translation_invariance(self):
        """测试整数平移扭结中心不改变弛豫能量"""
        params = synthetic_params(1.5)
        first = self.relaxer.relax_with_stats(sg_kink_initial(201, 100.0, params), params, self.cfg)
        second = self.relaxer.relax_with_stats(sg_kink_initial(201, 101.0, params), params, self.cfg)
        assert second.energy == pytest.approx(first.energy, rel=1e-10)

    def test_continuum_limit(self):
        """测试小 m 时弛豫能量趋于连续经典能量"""
        params = synthetic_params(0.1)
        n = required_chain_length(0.1) + 1
        result = self.relaxer.relax_with_stats(sg_kink_initial(n, (n - 1) / 2, params), params, self.cfg)
        assert result.energy == pytest.approx(classical_energy(params), rel=0.02)

    def test_not_converged(self):
        """测试迭代上限不足时抛出 ConvergenceError"""
        cfg = RelaxationConfig(max_iter=3)
        with pytest.raises(ConvergenceError) as info:
            self.relaxer.relax_with_stats(sg_kink_initial(201, 100.0, self.params), self.params, cfg)
        assert info.value.iterations == 3
        assert info.value.residual > cfg.tol


class TestPNBarrier:
    """PN 势垒测试类"""

    def setup_method(self):
        """测试前准备"""
        self.cfg = RelaxationConfig()

    def test_required_chain_length(self):
        """测试最小链长"""
        assert required_chain_length(0.5) == 160
        assert required_chain_length(0.5, 60.0) == 120
        with pytest.raises(DomainError):
            required_chain_length(0.0)

    def test_chain_too_short(self):
        """测试链长不足"""
        with pytest.raises(DomainError, match="过短"):
            pn_barrier(synthetic_params(1.0), self.cfg, n=41)

    def test_barrier_decreases_with_width(self):
        """测试扭结越宽 (m 越小) 势垒越低"""
        barriers = [pn_barrier(synthetic_params(m), self.cfg) for m in (2.0, 1.5, 1.0, 0.5)]
        assert all(b > 0 for b in barriers)
        assert all(wide < narrow for narrow, wide in zip(barriers, barriers[1:]))
        assert barriers[0] == pytest.approx(6.255e-2, rel=1e-3)
        assert barriers[2] == pytest.approx(6.42e-4, rel=1e-2)

    @pytest.mark.parametrize("m", [1.0, 1.5])
    def test_chain_length_convergence(self, m):
        """测试链长加倍后势垒变化小于 0.1%"""
        params = synthetic_params(m)
        n = 201
        assert pn_barrier(params, self.cfg, n=2 * n) == pytest.approx(
            pn_barrier(params, self.cfg, n=n), rel=1e-3)

    def test_details(self):
        """测试势垒详细结果"""
        result = pn_barrier_details(synthetic_params(1.5), self.cfg, n=200)
        assert result.n_atoms == 201
        assert result.bond.state.n_atoms == 202
        assert not result.degenerate
        assert result.site.state.center_class() == CenterClass.SITE
        assert result.bond.state.center_class() == CenterClass.BOND
        assert result.epsilon2 == pytest.approx(abs(result.energies[1] - result.energies[0]))
        assert result.iterations_site > 1 and result.iterations_bond > 1

    def test_matches_direct_minimization(self):
        """测试与 L-BFGS 对称子空间极小化结果一致"""
        params = synthetic_params(1.5)
        expected = abs(symmetric_minimum(202, params) - symmetric_minimum(201, params))
        assert pn_barrier(params, self.cfg, n=201) == pytest.approx(expected, rel=1e-2)

    def test_degenerate_warning(self, mocker, caplog):
        """测试两个扭结落在同一类别时给出警告"""
        mocker.patch.object(ChainState, 'center_class', return_value=CenterClass.SITE)
        with caplog.at_level(logging.WARNING):
            result = pn_barrier_details(synthetic_params(2.0), self.cfg)
        assert result.degenerate
        assert "退化" in caplog.text
