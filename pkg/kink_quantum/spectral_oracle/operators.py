"""
离散算子与本征谱
Discrete Operators and Spectra
"""

from typing import Tuple

import numpy as np
from scipy.linalg import eigh_tridiagonal

from ..exceptions import DomainError
from ..models.elliptic import EllipticSolution
from ..models.operator import DiscreteOperator
from ..sine_gordon.profile import potential_U


def kink_potential(m: float, k: float = 1.0):
    """U(x) = m²(2k² − 1 − 2k²cn²(mx; k)) 的采样函数"""
    sol = EllipticSolution(k=k, m=m)
    return lambda x: potential_U(x, sol)


def vacuum_potential(m: float):
    """U ≡ m²"""
    return lambda x: np.full(np.shape(x), m * m)


def build_operators(m: float, half_width: float, grid_step: float) -> Tuple[DiscreteOperator, DiscreteOperator]:
    """同一网格上的扭结算子与真空算子"""
    if not m > 0:
        raise DomainError(f"波数 m 必须为正数, 实际为 {m!r}")
    kink = DiscreteOperator.on_grid(kink_potential(m), half_width, grid_step)
    vacuum = DiscreteOperator.on_grid(vacuum_potential(m), half_width, grid_step)
    return kink, vacuum


def eigen_spectrum(op: DiscreteOperator) -> np.ndarray:
    """三对角矩阵的全部本征值, 升序"""
    values = eigh_tridiagonal(op.diagonal, op.off_diagonal, eigvals_only=True)
    return np.sort(values)


def count_below(spectrum: np.ndarray, level: float) -> int:
    return int(np.count_nonzero(spectrum < level))
