"""
位错线第二层 SG 模型
Second-Level Dislocation Model
"""

import logging
import math
from typing import Optional, Tuple, Union

from ..exceptions import DomainError
from ..fk_lattice.barrier import pn_barrier_details
from ..models.chain import ChainState, RelaxationConfig
from ..models.dislocation import MassConvention, PairPotentialCoeffs, SecondLevelParams
from ..models.material import ModelMode, ModelParams
from ..parameters.derivation import sound_speed
from ..semiclassic.pipeline import quantum_correction
from ..sine_gordon.energy import classical_energy
from .fit import fit_G2
from .pair_potential import kink_interaction_energy, pair_coeffs

logger = logging.getLogger(__name__)

DEFAULT_SHIFT_RANGE = 8


def effective_mass(p: ModelParams) -> float:
    """M2 = E₀/c² = (M/π)√(8ε/(a²G))"""
    c = sound_speed(p)
    return classical_energy(p) / (c * c)


def effective_mass_paper_coefficient(p: ModelParams) -> float:
    """按系数 (6/π) 给出的 M2 = (6/π)M√(2ε/(a²G)), 为 E₀/c² 的 3 倍"""
    return 6.0 / math.pi * p.atom_mass * math.sqrt(2.0 * p.epsilon / p.stiffness)


def interaction_samples(kink: ChainState, coeffs: PairPotentialCoeffs, shift_range: int,
                        row_spacing: Optional[float] = None):
    """ΔX = a … shift_range·a 处的相互作用能"""
    a = coeffs.equilibrium_distance
    return [
        (n * a, kink_interaction_energy(kink, kink, n * a, coeffs, row_spacing))
        for n in range(1, shift_range + 1)
    ]


def second_level_params(p: ModelParams, cfg: RelaxationConfig,
                        mass_convention: Union[str, MassConvention] = MassConvention.DEFINING,
                        shift_range: int = DEFAULT_SHIFT_RANGE,
                        row_spacing_factor: float = 1.0,
                        n: Optional[int] = None) -> SecondLevelParams:
    """
    组装位错线的第二层参数

    ε₂ 取自 PN 势垒; G₂ 对以原子为中心与以键为中心的两个扭结分别拟合后取平均;
    M₂ 按 mass_convention 选择。

    Args:
        p: 位错模式的第一层参数
        cfg: 弛豫配置
        mass_convention: M₂ 约定
        shift_range: 拟合使用的最大平移格点数
        row_spacing_factor: 行间距与 a 之比
        n: 链长, 默认由 PN 势垒计算决定

    Returns:
        SecondLevelParams
    """
    if p.mode != ModelMode.DISLOCATION:
        raise DomainError(f"第二层参数需要位错模式, 实际为 {p.mode.value}")
    convention = MassConvention(mass_convention)

    barrier = pn_barrier_details(p, cfg, n)
    coeffs = pair_coeffs(p.a, p.G)
    spacing = row_spacing_factor * p.a

    g2_site, residual_site = fit_G2(interaction_samples(barrier.site.state, coeffs, shift_range, spacing))
    g2_bond, residual_bond = fit_G2(interaction_samples(barrier.bond.state, coeffs, shift_range, spacing))
    logger.info(
        f"G₂ 拟合: site={g2_site:.6e} N/m (残差 {residual_site:.2e}), "
        f"bond={g2_bond:.6e} N/m (残差 {residual_bond:.2e})"
    )

    m2_defining = effective_mass(p)
    m2_coefficient = effective_mass_paper_coefficient(p)
    return SecondLevelParams(
        epsilon2=barrier.epsilon2,
        G2=0.5 * (g2_site + g2_bond),
        M2=m2_defining if convention == MassConvention.DEFINING else m2_coefficient,
        a2=p.a,
        G2_site=g2_site,
        G2_bond=g2_bond,
        M2_paper_coefficient=m2_coefficient,
        mass_convention=convention,
    )


def second_level_model(slp: SecondLevelParams) -> ModelParams:
    """把第二层常数写成 ModelParams, 以复用第一层的闭式"""
    return ModelParams(G=slp.G2, epsilon=slp.epsilon2, a=slp.a2, atom_mass=slp.M2,
                       mode=ModelMode.DISLOCATION)


def dislocation_kink_energy(slp: SecondLevelParams) -> Tuple[float, float]:
    """位错扭结能量与单圈修正 (E_d, ΔE_d), 单位 J"""
    params = second_level_model(slp)
    return classical_energy(params), quantum_correction(params)


def kink_antikink_pair_energy(slp: SecondLevelParams) -> Tuple[float, float]:
    """分离良好的扭结-反扭结对, 近似为单个扭结的两倍"""
    energy, correction = dislocation_kink_energy(slp)
    return 2.0 * energy, 2.0 * correction
