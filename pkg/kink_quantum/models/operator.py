"""
离散薛定谔算子数据模型
Discrete Schrödinger Operator Data Model
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np


@dataclass(frozen=True, eq=False)
class DiscreteOperator:
    """
    [−L, L] 上 Dirichlet 边界的 −∂² + U 三对角离散

    内部格点 x_i = −L + i·h, i = 1..n_points
    """
    grid_step: float
    n_points: int
    potential: np.ndarray
    domain_half_width: float

    def __post_init__(self):
        """数据验证"""
        if not self.grid_step > 0:
            raise ValueError(f"网格步长必须为正数, 实际为 {self.grid_step!r}")
        if not self.domain_half_width > 0:
            raise ValueError("区间半宽必须为正数")
        potential = np.array(self.potential, dtype=float)
        if potential.shape != (self.n_points,):
            raise ValueError(f"势能数组长度 {potential.shape} 与格点数 {self.n_points} 不符")
        if abs(self.n_points * self.grid_step - 2.0 * self.domain_half_width) > self.grid_step * (1 + 1e-9):
            raise ValueError("格点数与区间宽度不一致")
        potential.setflags(write=False)
        object.__setattr__(self, 'potential', potential)

    @classmethod
    def on_grid(cls, potential_fn: Callable[[np.ndarray], np.ndarray],
                half_width: float, grid_step: float) -> 'DiscreteOperator':
        """在 [−L, L] 的内部格点上采样势能"""
        n_points = int(round(2.0 * half_width / grid_step)) - 1
        x = -half_width + grid_step * np.arange(1, n_points + 1)
        return cls(grid_step=grid_step, n_points=n_points,
                   potential=np.asarray(potential_fn(x), dtype=float),
                   domain_half_width=half_width)

    @property
    def grid(self) -> np.ndarray:
        return -self.domain_half_width + self.grid_step * np.arange(1, self.n_points + 1)

    @property
    def diagonal(self) -> np.ndarray:
        return 2.0 / self.grid_step ** 2 + self.potential

    @property
    def off_diagonal(self) -> np.ndarray:
        return np.full(self.n_points - 1, -1.0 / self.grid_step ** 2)

    def to_dense(self) -> np.ndarray:
        """稠密对称矩阵, 仅用于小规模检查"""
        return (np.diag(self.diagonal) + np.diag(self.off_diagonal, 1)
                + np.diag(self.off_diagonal, -1))
