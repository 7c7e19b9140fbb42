"""
材料与模型参数数据模型
Material and Model Parameter Data Models
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

from ..exceptions import MaterialValidationError

# 晶格常数合理范围 (m)
LATTICE_CONST_WINDOW = (1e-11, 1e-8)


class ModelMode(str, Enum):
    """ε 取值约定: 挤列子 (crowdion) 或位错 (dislocation)"""
    CROWDION = "crowdion"
    DISLOCATION = "dislocation"

    @classmethod
    def parse(cls, value: Union[str, "ModelMode"]) -> "ModelMode":
        """从字符串解析模式"""
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            choices = ", ".join(mode.value for mode in cls)
            raise ValueError(f"未知模式 {value!r}, 可选: {choices}") from None


@dataclass(frozen=True)
class Material:
    """单一元素的实测晶体常数 (SI 单位)"""
    name: str
    atomic_mass: float      # kg
    lattice_const: float    # m
    shear_modulus: float    # Pa
    bulk_modulus: float     # Pa

    def __post_init__(self):
        """数据验证"""
        if not self.name or not self.name.strip():
            raise MaterialValidationError("name", self.name, "名称不能为空")
        for name in ("atomic_mass", "lattice_const", "shear_modulus", "bulk_modulus"):
            value = getattr(self, name)
            if (isinstance(value, bool) or not isinstance(value, (int, float))
                    or not math.isfinite(value) or value <= 0):
                raise MaterialValidationError(name, value)
        low, high = LATTICE_CONST_WINDOW
        if not low < self.lattice_const < high:
            raise MaterialValidationError(
                "lattice_const", self.lattice_const, f"必须在 ({low}, {high}) m 之间"
            )

    def to_dict(self) -> dict:
        """转换为字典格式"""
        return {
            'name': self.name,
            'atomic_mass': self.atomic_mass,
            'lattice_const': self.lattice_const,
            'shear_modulus': self.shear_modulus,
            'bulk_modulus': self.bulk_modulus,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'Material':
        """从字典创建实例"""
        return cls(**data)

    def scaled_moduli(self, factor: float) -> 'Material':
        """返回两个模量同乘 factor 的新材料"""
        return Material(
            name=self.name,
            atomic_mass=self.atomic_mass,
            lattice_const=self.lattice_const,
            shear_modulus=self.shear_modulus * factor,
            bulk_modulus=self.bulk_modulus * factor,
        )


@dataclass(frozen=True)
class ModelParams:
    """
    FK/SG 模型常数 (物理单位)

    G: 谐振耦合 N/m; epsilon: 基底势幅值 J; a: 晶格常数 m;
    atom_mass: 原子质量 kg; m_dimless = π√(2ε/(a²G))
    """
    G: float
    epsilon: float
    a: float
    atom_mass: float
    mode: ModelMode = ModelMode.CROWDION
    m_dimless: Optional[float] = field(default=None)

    def __post_init__(self):
        """数据验证"""
        for name in ("G", "a", "atom_mass"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0:
                raise ValueError(f"{name} 必须为正数, 实际为 {value!r}")
        if not math.isfinite(self.epsilon) or self.epsilon < 0:
            raise ValueError(f"epsilon 不能为负数, 实际为 {self.epsilon!r}")
        object.__setattr__(self, 'mode', ModelMode.parse(self.mode))

        expected = self.wavenumber(self.G, self.epsilon, self.a)
        if self.m_dimless is None:
            object.__setattr__(self, 'm_dimless', expected)
        elif not math.isclose(self.m_dimless, expected, rel_tol=1e-14, abs_tol=0.0):
            raise ValueError(
                f"m_dimless={self.m_dimless!r} 与 G, ε, a 不一致 (应为 {expected!r})"
            )

    @staticmethod
    def wavenumber(G: float, epsilon: float, a: float) -> float:
        """无量纲波数 m = π√(2ε/(a²G))"""
        return math.pi * math.sqrt(2.0 * epsilon / (a * a * G))

    @property
    def substrate_coefficient(self) -> float:
        """弛豫方程中的系数 επ/(a²G) = m²/(2π)"""
        return self.epsilon * math.pi / (self.a * self.a * self.G)

    @property
    def stiffness(self) -> float:
        """a²G, 单位 J"""
        return self.a * self.a * self.G

    def to_dict(self) -> dict:
        """转换为字典格式"""
        return {
            'G': self.G,
            'epsilon': self.epsilon,
            'a': self.a,
            'atom_mass': self.atom_mass,
            'mode': self.mode.value,
            'm_dimless': self.m_dimless,
        }
