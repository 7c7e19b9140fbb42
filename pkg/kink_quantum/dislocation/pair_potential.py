"""
扭结间原子对相互作用
Kink-Kink Pair Interaction
"""

import math
from typing import Optional

import numpy as np

from ..exceptions import DomainError, OverlapError
from ..models.chain import ChainState
from ..models.dislocation import PairPotentialCoeffs

# 原子对最小允许间距, 以 a 为单位
OVERLAP_LIMIT = 0.1
SHIFT_TOLERANCE = 1e-9


def pair_coeffs(a: float, G: float) -> PairPotentialCoeffs:
    """C1 = a⁴G/2, C2 = a³G, 使 E′(a)=0 且 E″(a)=G"""
    if not (a > 0 and G > 0):
        raise DomainError(f"a 与 G 必须为正数: a={a!r}, G={G!r}")
    return PairPotentialCoeffs(C1=0.5 * a ** 4 * G, C2=a ** 3 * G)


def _sorted_sum(terms: np.ndarray) -> float:
    order = np.argsort(-np.abs(terms), kind='stable')
    return math.fsum(terms[order])


def _pair_distances(xa: np.ndarray, xb: np.ndarray, row_spacing: float) -> np.ndarray:
    return np.hypot(xb - xa, row_spacing)


def interaction_from_positions(xa: np.ndarray, xb: np.ndarray, shift: float,
                               coeffs: PairPotentialCoeffs, row_spacing: float = 0.0) -> float:
    """
    相对排列的原子对能量之和 Σ E(r_i(shift)) − Σ E(r_i(0))

    Args:
        xa: A 链原子沿链方向的坐标, m
        xb: B 链原子坐标, 与 xa 逐一配对
        shift: B 链整体沿链方向的平移, m
        coeffs: 对势系数
        row_spacing: 两链之间的垂直距离, m

    Returns:
        相互作用能, J
    """
    xa = np.asarray(xa, dtype=float)
    xb = np.asarray(xb, dtype=float)
    if xa.shape != xb.shape:
        raise ValueError("两条链的原子数必须相同")
    return _pair_sum(xa, xb + shift, xb, coeffs, row_spacing)


def _pair_sum(xa: np.ndarray, xb_shift: np.ndarray, xb_ref: np.ndarray,
              coeffs: PairPotentialCoeffs, row_spacing: float) -> float:
    r_shift = _pair_distances(xa, xb_shift, row_spacing)
    r_ref = _pair_distances(xa, xb_ref, row_spacing)
    _check_overlap(np.concatenate([r_shift, r_ref]), coeffs.equilibrium_distance)
    return _sorted_sum(coeffs.energy(r_shift) - coeffs.energy(r_ref))


def _check_overlap(distances: np.ndarray, a: float) -> None:
    limit = OVERLAP_LIMIT * a
    closest = float(np.min(distances)) if distances.size else math.inf
    if closest < limit:
        raise OverlapError(closest, limit)


def shifted_profile(state: ChainState, n_sites: int) -> np.ndarray:
    """把扭结平移 n_sites 个格点, 超出链端的部分以边界值延拓"""
    phi = state.displacements
    size = phi.size
    source = np.arange(size) - n_sites
    left, right = state.boundary
    return np.where(source < 0, left,
                    np.where(source >= size, right, phi[np.clip(source, 0, size - 1)]))


def shift_in_sites(delta_x: float, a: float) -> int:
    """ΔX 必须是 a 的整数倍"""
    ratio = delta_x / a
    n_sites = int(round(ratio))
    if abs(ratio - n_sites) > SHIFT_TOLERANCE:
        raise DomainError(f"ΔX={delta_x!r} m 不是晶格常数 {a!r} m 的整数倍")
    return n_sites


def kink_interaction_energy(kink_a: ChainState, kink_b: ChainState, delta_x: float,
                            coeffs: PairPotentialCoeffs,
                            row_spacing: Optional[float] = None) -> float:
    """
    相邻两行 FK 扭结之间的相互作用能

    第 i 个原子位于 (i + φ_i)·a, B 行距 A 行 row_spacing (默认 a)。
    B 的扭结沿行平移 ΔX 后与 A 逐个原子配对求和, 并减去 ΔX=0 时的同一求和;
    各项按绝对值从大到小累加。

    Args:
        kink_a: 弛豫后的扭结
        kink_b: 相邻行的弛豫扭结, 原子数与 kink_a 相同
        delta_x: 平移量, m, 须为 a 的整数倍
        coeffs: 对势系数, 平衡距离即晶格常数
        row_spacing: 行间距, m

    Returns:
        相互作用能, J
    """
    if kink_a.n_atoms != kink_b.n_atoms:
        raise ValueError(f"两个扭结的原子数不同: {kink_a.n_atoms} != {kink_b.n_atoms}")
    a = coeffs.equilibrium_distance
    spacing = a if row_spacing is None else float(row_spacing)
    n_sites = shift_in_sites(delta_x, a)
    if n_sites == 0:
        return 0.0

    sites = np.arange(kink_a.n_atoms, dtype=float)
    xa = (sites + kink_a.displacements) * a
    xb_ref = (sites + kink_b.displacements) * a
    xb_shift = (sites + shifted_profile(kink_b, n_sites)) * a

    return _pair_sum(xa, xb_shift, xb_ref, coeffs, spacing)
