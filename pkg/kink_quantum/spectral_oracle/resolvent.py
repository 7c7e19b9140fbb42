"""
数值对角预解式
Numerical Diagonal Resolvent
"""

import math
from typing import Callable

import numpy as np

from ..exceptions import DomainError, NumericalInstabilityError
from .operators import kink_potential


def _centered_grid(x: float, half_width: float, grid_step: float) -> np.ndarray:
    n_side = int(round(half_width / grid_step))
    return x + grid_step * np.arange(-n_side, n_side + 1)


def _diagonal_inverse(diagonal: np.ndarray, center: int) -> float:
    """
    三对角矩阵 tridiag(−1, d, −1) 逆矩阵的 (center, center) 元

    左侧前向消元 ρ_j = d_j − 1/ρ_{j−1}, 右侧 σ_j = 1/(d_{j+1} − σ_{j+1}),
    所求元素为 1/(ρ_center − σ_center)
    """
    rho = float(diagonal[0])
    for j in range(1, center + 1):
        if not rho > 0:
            raise NumericalInstabilityError(f"左侧递推在第 {j} 点失稳 (ρ={rho!r})")
        rho = float(diagonal[j]) - 1.0 / rho

    sigma = 0.0
    for j in range(diagonal.size - 1, center, -1):
        denominator = float(diagonal[j]) - sigma
        if not denominator > 0:
            raise NumericalInstabilityError(f"右侧递推在第 {j} 点失稳")
        sigma = 1.0 / denominator

    pivot = rho - sigma
    if not (math.isfinite(pivot) and pivot > 0):
        raise NumericalInstabilityError(f"主元 {pivot!r} 无效, p 可能不在谱下方")
    return 1.0 / pivot


def resolvent_on_grid(p: float, x: float, potential_fn: Callable[[np.ndarray], np.ndarray],
                      half_width: float, grid_step: float) -> float:
    """以 x 为中心、Dirichlet 边界的二阶差分近似 G(p, x, x)"""
    grid = _centered_grid(x, half_width, grid_step)
    diagonal = 2.0 + grid_step ** 2 * (np.asarray(potential_fn(grid), dtype=float) - p)
    return grid_step * _diagonal_inverse(diagonal, grid.size // 2)


def numerical_resolvent_diag(p: float, x: float, m: float, k: float = 1.0,
                             half_width: float = 30.0, grid_step: float = 0.01) -> float:
    """
    (−∂² + U − p)⁻¹ 的对角元

    分别在步长 h 与 h/2 上求值, 再做 Richardson 外推 (4G_{h/2} − G_h)/3

    Args:
        p: 谱参数, 必须为负
        x: 坐标
        m: 波数
        k: 椭圆模数
        half_width: 以 x 为中心的区间半宽
        grid_step: 粗网格步长

    Returns:
        G(p, x, x)
    """
    if not p < 0:
        raise DomainError(f"谱参数必须为负数, 实际为 {p!r}")
    potential = kink_potential(m, k)
    coarse = resolvent_on_grid(p, x, potential, half_width, grid_step)
    fine = resolvent_on_grid(p, x, potential, half_width, 0.5 * grid_step)
    value = (4.0 * fine - coarse) / 3.0
    if not math.isfinite(value):
        raise NumericalInstabilityError(f"预解式数值溢出 (p={p!r})")
    return value
