"""
位错线模型数据
Dislocation Line Data Models
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np


class MassConvention(str, Enum):
    """有效质量约定: E₀/c² 或文中给出的系数 (6/π)M√(2ε/(a²G))"""
    DEFINING = "defining"
    PAPER = "paper"


@dataclass(frozen=True)
class PairPotentialCoeffs:
    """原子对势 E(r) = C1/r² − C2/r 的系数"""
    C1: float  # J·m²
    C2: float  # J·m

    def __post_init__(self):
        """数据验证"""
        if not (self.C1 > 0 and self.C2 > 0):
            raise ValueError(f"对势系数必须为正数: C1={self.C1!r}, C2={self.C2!r}")

    @property
    def equilibrium_distance(self) -> float:
        """E′(r)=0 的位置 2C1/C2"""
        return 2.0 * self.C1 / self.C2

    def energy(self, r):
        r = np.asarray(r, dtype=float)
        return self.C1 / (r * r) - self.C2 / r

    def first_derivative(self, r):
        r = np.asarray(r, dtype=float)
        return -2.0 * self.C1 / r ** 3 + self.C2 / (r * r)

    def second_derivative(self, r):
        r = np.asarray(r, dtype=float)
        return 6.0 * self.C1 / r ** 4 - 2.0 * self.C2 / r ** 3

    def to_dict(self) -> dict:
        return {'C1': self.C1, 'C2': self.C2}


@dataclass(frozen=True)
class SecondLevelParams:
    """
    第二层 (位错线) SG 模型常数

    epsilon2: PN 势垒 J; G2: 扭结间谐振耦合 N/m; M2: 扭结有效质量 kg; a2: 晶格常数 m
    """
    epsilon2: float
    G2: float
    M2: float
    a2: float
    G2_site: Optional[float] = None
    G2_bond: Optional[float] = None
    M2_paper_coefficient: Optional[float] = None
    mass_convention: MassConvention = MassConvention.DEFINING

    def __post_init__(self):
        """数据验证"""
        if not math.isfinite(self.epsilon2) or self.epsilon2 < 0:
            raise ValueError(f"ε₂ 不能为负数, 实际为 {self.epsilon2!r}")
        for name in ("G2", "M2", "a2"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise ValueError(f"{name} 必须为正数, 实际为 {value!r}")
        object.__setattr__(self, 'mass_convention', MassConvention(self.mass_convention))

    def to_dict(self) -> dict:
        return {
            'epsilon2': self.epsilon2,
            'G2': self.G2,
            'M2': self.M2,
            'a2': self.a2,
            'G2_site': self.G2_site,
            'G2_bond': self.G2_bond,
            'M2_paper_coefficient': self.M2_paper_coefficient,
            'mass_convention': self.mass_convention.value,
        }
