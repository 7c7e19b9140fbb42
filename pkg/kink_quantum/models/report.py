"""
能量报告行数据模型
Energy Report Row Data Model
"""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ReportRow:
    """一种材料的位错扭结 (meV) 与挤列子 (eV) 能量及量子修正"""
    material: str
    E_d: float   # meV
    dE_d: float  # meV
    E_c: float   # eV
    dE_c: float  # eV

    def __post_init__(self):
        """数据验证"""
        for name in ("E_d", "dE_d", "E_c", "dE_c"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise ValueError(f"{name} 必须为非负有限值, 实际为 {value!r}")
        if self.E_c > 0 and not self.dE_c < self.E_c:
            raise ValueError("挤列子量子修正必须小于经典能量")
        if self.E_d > 0 and not self.dE_d < self.E_d:
            raise ValueError("位错扭结量子修正必须小于经典能量")

    def to_dict(self) -> dict:
        """转换为字典格式, 列名带单位"""
        return {
            'material': self.material,
            'E_d_meV': self.E_d,
            'dE_d_meV': self.dE_d,
            'E_c_eV': self.E_c,
            'dE_c_eV': self.dE_c,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'ReportRow':
        return cls(material=data['material'], E_d=data['E_d_meV'], dE_d=data['dE_d_meV'],
                   E_c=data['E_c_eV'], dE_c=data['dE_c_eV'])
