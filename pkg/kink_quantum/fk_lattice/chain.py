"""
FK原子链能量与初始构型
Frenkel-Kontorova Chain Energy and Initial Configurations
"""

import math

import numpy as np

from ..models.chain import ChainState
from ..models.elliptic import EllipticSolution
from ..models.material import ModelParams
from ..sine_gordon.profile import static_solution


def chain_energy_terms(s: ChainState, p: ModelParams) -> np.ndarray:
    """逐项能量: 每根键的 (a²G/2)(Δφ)² 与每个原子的 (ε/2)(1 − cos 2πφ)"""
    phi = s.displacements
    bonds = 0.5 * p.stiffness * np.diff(phi) ** 2
    substrate = p.epsilon * np.sin(math.pi * phi) ** 2
    return np.concatenate([bonds, substrate])


def chain_energy(s: ChainState, p: ModelParams) -> float:
    """
    原子链总能量, 单位 J

    Σ_i (a²G/2)(φ_{i+1} − φ_i)² + Σ_i (ε/2)(1 − cos 2πφ_i), 用 fsum 精确累加
    """
    return math.fsum(chain_energy_terms(s, p))


def chain_forces(phi: np.ndarray, substrate_coefficient: float) -> np.ndarray:
    """内部原子的无量纲力 (φ_{i+1} − 2φ_i + φ_{i−1}) − (επ/(a²G))·sin 2πφ_i"""
    inner = phi[1:-1]
    return phi[2:] - 2.0 * inner + phi[:-2] - substrate_coefficient * np.sin(2.0 * math.pi * inner)


def sg_kink_initial(n: int, center: float, p: ModelParams) -> ChainState:
    """
    以 k=1 连续扭结作为初始构型

    Args:
        n: 原子数
        center: 扭结中心 (格点序号, 可为半整数)
        p: 模型参数

    Returns:
        φ_i = static_solution(i − center), 边界固定为 0 与 1
    """
    if not 0 < center < n - 1:
        raise ValueError(f"扭结中心 {center!r} 必须位于 (0, {n - 1}) 内")
    sol = EllipticSolution.kink(p.m_dimless, center=float(center))
    phi = static_solution(np.arange(n, dtype=float), sol)
    return ChainState(displacements=phi, boundary=(0.0, 1.0))


def ground_state(n: int) -> ChainState:
    """全部位移为零的基态"""
    return ChainState(displacements=np.zeros(n), boundary=(0.0, 0.0))
