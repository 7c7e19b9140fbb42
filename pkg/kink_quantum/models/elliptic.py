"""
椭圆函数相关数据模型
Elliptic Solution Data Models
"""

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class JacobiTriple:
    """Jacobi 椭圆函数值 (sn, cn, dn)"""
    sn: float
    cn: float
    dn: float

    def identity_errors(self, k: float) -> tuple:
        """返回 |sn²+cn²−1| 与 |dn²+k²sn²−1|"""
        return (
            abs(self.sn ** 2 + self.cn ** 2 - 1.0),
            abs(self.dn ** 2 + (k * self.sn) ** 2 - 1.0),
        )


@dataclass(frozen=True)
class EllipticSolution:
    """静态 SG 椭圆解: 模数 k, 波数 m, 中心 x₀"""
    k: float
    m: float
    center: float = 0.0

    def __post_init__(self):
        """数据验证"""
        if not 0.0 <= self.k <= 1.0:
            raise ValueError(f"椭圆模数 k 必须在 [0, 1] 之间, 实际为 {self.k!r}")
        if not math.isfinite(self.m) or self.m <= 0:
            raise ValueError(f"波数 m 必须为正数, 实际为 {self.m!r}")
        if not math.isfinite(self.center):
            raise ValueError("中心位置必须为有限值")

    @property
    def is_kink(self) -> bool:
        return self.k == 1.0

    @classmethod
    def kink(cls, m: float, center: float = 0.0) -> 'EllipticSolution':
        """k=1 单扭结解"""
        return cls(k=1.0, m=m, center=center)

    def to_dict(self) -> dict:
        return {'k': self.k, 'm': self.m, 'center': self.center}
