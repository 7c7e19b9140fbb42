"""
经典扭结能量
Classical Kink Energy
"""

import math

from scipy.integrate import quad

from ..models.elliptic import EllipticSolution
from ..models.material import ModelParams
from .profile import profile_slope, static_solution


def classical_energy(p: ModelParams) -> float:
    """E_c = (1/π)√(8 ε a² G), 单位 J"""
    return math.sqrt(8.0 * p.epsilon * p.stiffness) / math.pi


def kink_energy_density(x_prime: float, sol: EllipticSolution, p: ModelParams) -> float:
    """每个格点长度上的能量: (a²G/2)φ′² + (ε/2)(1 − cos 2πφ)"""
    slope = profile_slope(x_prime, sol)
    phi = static_solution(x_prime, sol)
    return 0.5 * p.stiffness * slope * slope + 0.5 * p.epsilon * (1.0 - math.cos(2.0 * math.pi * phi))


def integrated_kink_energy(p: ModelParams, span: float = 40.0) -> float:
    """
    对 k=1 静态解的能量密度在 [−span/m, span/m] 上自适应积分

    Args:
        p: 模型参数 (ε > 0)
        span: 积分区间半宽, 以 1/m 为单位

    Returns:
        积分能量, J
    """
    if p.m_dimless <= 0:
        return 0.0
    sol = EllipticSolution.kink(p.m_dimless)
    half_width = span / p.m_dimless
    value, _ = quad(kink_energy_density, -half_width, half_width, args=(sol, p),
                    points=[0.0], epsabs=0.0, epsrel=1e-11, limit=400)
    return value
