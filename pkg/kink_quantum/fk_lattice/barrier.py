"""
Peierls-Nabarro 势垒
Peierls-Nabarro Barrier
"""

import logging
import math
from typing import Optional

from ..exceptions import DomainError
from ..models.chain import CenterClass, PNBarrierResult, RelaxationConfig
from ..models.material import ModelParams
from .chain import sg_kink_initial
from .relaxer import ChainRelaxer

logger = logging.getLogger(__name__)

MIN_CHAIN = 201
WIDTH_FACTOR = 80.0


def required_chain_length(m: float, width_factor: float = WIDTH_FACTOR) -> int:
    """边界应变可忽略所需的最小链长 ⌈width_factor/m⌉"""
    if not m > 0:
        raise DomainError("m 必须为正数")
    return math.ceil(width_factor / m)


def default_chain_length(m: float) -> int:
    return max(MIN_CHAIN, required_chain_length(m))


def pn_barrier_details(p: ModelParams, cfg: RelaxationConfig, n: Optional[int] = None,
                       relaxer: Optional[ChainRelaxer] = None) -> PNBarrierResult:
    """
    分别弛豫以原子为中心与以键为中心的扭结, 取能量差

    以原子为中心的链取奇数个原子, 以键为中心的链多一个原子, 两者都关于中心严格对称,
    对称的鞍点构型因此在弛豫中保持。

    Args:
        p: 模型参数
        cfg: 弛豫配置
        n: 链长, 默认 max(201, ⌈80/m⌉)
        relaxer: 弛豫器, 默认新建

    Returns:
        PNBarrierResult
    """
    m = p.m_dimless
    required = required_chain_length(m)
    if n is None:
        n = max(MIN_CHAIN, required)
    if n < required:
        raise DomainError(f"链长 {n} 过短, m={m:.4g} 时至少需要 {required} 个原子")
    n_site = n if n % 2 == 1 else n + 1
    n_bond = n_site + 1

    relaxer = relaxer or ChainRelaxer()
    site = relaxer.relax_with_stats(sg_kink_initial(n_site, (n_site - 1) / 2, p), p, cfg)
    bond = relaxer.relax_with_stats(sg_kink_initial(n_bond, (n_bond - 1) / 2, p), p, cfg)

    epsilon2 = abs(bond.energy - site.energy)
    degenerate = site.state.center_class() == bond.state.center_class()
    if degenerate:
        logger.warning(
            f"两个弛豫扭结落在同一中心类别 ({site.state.center_class().value}), 势垒结果退化"
        )
    logger.info(f"PN 势垒 ε₂ = {epsilon2:.6e} J (m={m:.4g}, n={n_site})")
    return PNBarrierResult(
        epsilon2=epsilon2,
        n_atoms=n_site,
        site=site,
        bond=bond,
        degenerate=degenerate,
        energies=(site.energy, bond.energy),
    )


def pn_barrier(p: ModelParams, cfg: RelaxationConfig, n: Optional[int] = None) -> float:
    """ε₂ = |E_bond − E_site|, 单位 J"""
    return pn_barrier_details(p, cfg, n).epsilon2


__all__ = ['pn_barrier', 'pn_barrier_details', 'default_chain_length',
           'required_chain_length', 'CenterClass']
