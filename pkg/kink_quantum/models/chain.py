"""
FK原子链数据模型
Frenkel-Kontorova Chain Data Models
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

import numpy as np

MIN_CHAIN_ATOMS = 5


class CenterClass(str, Enum):
    """扭结中心类别: 位于原子上或两原子之间"""
    SITE = "site"
    BOND = "bond"


@dataclass(frozen=True, eq=False)
class ChainState:
    """
    有限FK原子链状态

    displacements 为无量纲位移 φ_i (单位 a), 首尾两个原子固定为 boundary 值
    """
    displacements: np.ndarray
    boundary: Tuple[float, float] = (0.0, 1.0)

    def __post_init__(self):
        """数据验证"""
        values = np.array(self.displacements, dtype=float)
        if values.ndim != 1:
            raise ValueError("位移必须为一维数组")
        if values.size < MIN_CHAIN_ATOMS:
            raise ValueError(f"原子数至少为 {MIN_CHAIN_ATOMS}, 实际为 {values.size}")
        if not np.all(np.isfinite(values)):
            raise ValueError("位移必须为有限值")
        left, right = float(self.boundary[0]), float(self.boundary[1])
        values[0], values[-1] = left, right
        values.setflags(write=False)
        object.__setattr__(self, 'displacements', values)
        object.__setattr__(self, 'boundary', (left, right))

    @property
    def n_atoms(self) -> int:
        return int(self.displacements.size)

    def with_displacements(self, values: np.ndarray) -> 'ChainState':
        """相同边界的新状态"""
        return ChainState(displacements=values, boundary=self.boundary)

    def is_monotone(self, tol: float = 1e-9) -> bool:
        """位移是否单调不减 (允许 tol 误差)"""
        return bool(np.all(np.diff(self.displacements) >= -tol))

    def center_position(self) -> float:
        """φ = (φ_left+φ_right)/2 处的插值位置 (单位: 格点)"""
        phi = self.displacements
        level = 0.5 * (self.boundary[0] + self.boundary[1])
        above = np.nonzero(phi >= level)[0]
        if above.size == 0 or above[0] == 0:
            raise ValueError("该状态不是扭结, 无法确定中心")
        j = int(above[0])
        lower, upper = phi[j - 1], phi[j]
        if upper == lower:
            return float(j)
        return (j - 1) + float((level - lower) / (upper - lower))

    def center_class(self) -> CenterClass:
        """按中心的小数部分判断类别"""
        fraction = self.center_position() % 1.0
        distance_to_site = min(fraction, 1.0 - fraction)
        return CenterClass.SITE if distance_to_site < 0.25 else CenterClass.BOND

    def to_dict(self) -> dict:
        return {
            'displacements': self.displacements.tolist(),
            'boundary': list(self.boundary),
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'ChainState':
        return cls(displacements=np.asarray(data['displacements'], dtype=float),
                   boundary=tuple(data.get('boundary', (0.0, 1.0))))


@dataclass(frozen=True)
class RelaxationConfig:
    """临界阻尼弛豫配置"""
    dt: float = 0.2
    tol: float = 1e-12
    max_iter: int = 10_000_000

    def __post_init__(self):
        """数据验证"""
        if not 0.0 < self.dt <= 0.4:
            raise ValueError(f"步长 dt 必须在 (0, 0.4] 之间, 实际为 {self.dt!r}")
        if not self.tol > 0:
            raise ValueError(f"收敛阈值必须为正数, 实际为 {self.tol!r}")
        if (isinstance(self.max_iter, bool) or not isinstance(self.max_iter, int)
                or self.max_iter < 1):
            raise ValueError(f"最大迭代次数必须为至少 1 的整数, 实际为 {self.max_iter!r}")


@dataclass(frozen=True)
class RelaxationResult:
    """弛豫结果: 最终状态, 迭代次数, 最后一步的最大位移变化"""
    state: ChainState
    iterations: int
    residual: float
    energy: Optional[float] = None


@dataclass(frozen=True)
class PNBarrierResult:
    """Peierls-Nabarro 势垒计算结果"""
    epsilon2: float
    n_atoms: int
    site: RelaxationResult
    bond: RelaxationResult
    degenerate: bool = False
    energies: Tuple[float, float] = field(default=(math.nan, math.nan))

    @property
    def iterations_site(self) -> int:
        return self.site.iterations

    @property
    def iterations_bond(self) -> int:
        return self.bond.iterations
