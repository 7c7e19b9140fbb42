"""
谱计算数据模型
Spectral Data Models
"""

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np
from numpy.polynomial import Polynomial
from scipy.constants import hbar as HBAR

from .material import ModelParams


@dataclass(frozen=True)
class ResolventDiagonal:
    """
    对角预解式 G(p, z) = P(p, z) / (2√Q(p))

    P(p, z) = p − m²k²·z, Q(p) = −p(p − m²k²)(p − m²(k² − 1)), z = cn²(mx; k)
    """
    k: float
    m: float

    def __post_init__(self):
        """数据验证"""
        if not 0.0 <= self.k <= 1.0:
            raise ValueError(f"椭圆模数 k 必须在 [0, 1] 之间, 实际为 {self.k!r}")
        if not math.isfinite(self.m) or self.m <= 0:
            raise ValueError(f"波数 m 必须为正数, 实际为 {self.m!r}")

    @property
    def z_coefficient(self) -> float:
        """P 中 z 的系数 −m²k²"""
        return -(self.m * self.k) ** 2

    @property
    def Q_polynomial(self) -> Polynomial:
        """Q(p) 的三次多项式 (升幂系数)"""
        m2, k2 = self.m ** 2, self.k ** 2
        return Polynomial([0.0, m2 * m2 * k2 * (1.0 - k2), m2 * (2.0 * k2 - 1.0), -1.0])

    @property
    def Q_roots(self) -> tuple:
        """Q 的三个根 {0, m²k², m²(k²−1)}, 精确给出"""
        m2, k2 = self.m ** 2, self.k ** 2
        return (0.0, m2 * k2, m2 * (k2 - 1.0))

    def P(self, p, z):
        return p + self.z_coefficient * np.asarray(z)

    def Q(self, p):
        return self.Q_polynomial(p)

    def to_dict(self) -> dict:
        return {
            'k': self.k,
            'm': self.m,
            'P': {'p': 1.0, 'z': self.z_coefficient},
            'Q': list(self.Q_polynomial.coef),
        }


@dataclass(frozen=True)
class RegularizationParams:
    """正规化参数: 传播时间尺度 T (s), 谱缩放因子 r, 约化普朗克常数"""
    T: float
    r: float
    hbar: float = HBAR
    tie_factor: float = 1.0  # r / √(εT/ħ); 1 表示绑定

    def __post_init__(self):
        """数据验证"""
        if not math.isfinite(self.T) or self.T <= 0:
            raise ValueError(f"时间尺度 T 必须为正数, 实际为 {self.T!r}")
        if not math.isfinite(self.r) or self.r <= 0:
            raise ValueError(f"缩放因子 r 必须为正数, 实际为 {self.r!r}")
        if self.hbar <= 0:
            raise ValueError("ħ 必须为正数")

    @property
    def is_tied(self) -> bool:
        return self.tie_factor == 1.0

    @classmethod
    def tied(cls, params: ModelParams, T: float, hbar: float = HBAR) -> 'RegularizationParams':
        """r² = εT/ħ"""
        return cls.untied(params, T, 1.0, hbar=hbar)

    @classmethod
    def untied(cls, params: ModelParams, T: float, factor: float,
               hbar: float = HBAR) -> 'RegularizationParams':
        """r = factor·√(εT/ħ)"""
        if params.epsilon <= 0:
            raise ValueError("ε 为零时无法确定缩放因子 r")
        if T <= 0:
            raise ValueError(f"时间尺度 T 必须为正数, 实际为 {T!r}")
        return cls(T=T, r=factor * math.sqrt(params.epsilon * T / hbar), hbar=hbar,
                   tie_factor=factor)

    def with_r(self, r: float) -> 'RegularizationParams':
        """相同 T, 任意 r"""
        return replace(self, r=r, tie_factor=float('nan'))

    def to_dict(self) -> dict:
        return {'T': self.T, 'r': self.r, 'hbar': self.hbar}


@dataclass(frozen=True)
class SpectralPrefactors:
    """
    时空算子前置因子 A = i|A|, B = i|B|

    相位以四分之一圈计数: 相位角 = (π/2)·quarter_turns
    """
    A_mag: float
    B_mag: float
    a_quarter_turns: int = 1
    b_quarter_turns: int = 1

    def __post_init__(self):
        """数据验证"""
        if not (math.isfinite(self.A_mag) and self.A_mag > 0):
            raise ValueError(f"|A| 必须为正数, 实际为 {self.A_mag!r}")
        if not (math.isfinite(self.B_mag) and self.B_mag > 0):
            raise ValueError(f"|B| 必须为正数, 实际为 {self.B_mag!r}")
        object.__setattr__(self, 'a_quarter_turns', int(self.a_quarter_turns) % 4)
        object.__setattr__(self, 'b_quarter_turns', int(self.b_quarter_turns) % 4)

    @classmethod
    def from_params(cls, params: ModelParams, T: float, hbar: float = HBAR) -> 'SpectralPrefactors':
        """A = ia²GT/(2πħ), B = ia²M/(2πħT)"""
        two_pi_hbar = 2.0 * math.pi * hbar
        return cls(
            A_mag=params.stiffness * T / two_pi_hbar,
            B_mag=params.a * params.a * params.atom_mass / (two_pi_hbar * T),
        )

    def euclidean(self) -> 'SpectralPrefactors':
        """欧氏相位: −A 与 B 均为正实数"""
        return replace(self, a_quarter_turns=2, b_quarter_turns=0)

    @property
    def neg_a_angle(self) -> float:
        """arg(−A) ∈ [0, 2π), 物理相位下为 3π/2"""
        return 0.5 * math.pi * ((self.a_quarter_turns + 2) % 4)

    @property
    def b_angle(self) -> float:
        return 0.5 * math.pi * self.b_quarter_turns

    @property
    def A(self) -> complex:
        return self.A_mag * cmath.exp(1j * 0.5 * math.pi * self.a_quarter_turns)

    @property
    def B(self) -> complex:
        return self.B_mag * cmath.exp(1j * self.b_angle)

    @property
    def log_neg_a(self) -> complex:
        """ln(−A), 分支由相位计数确定"""
        return complex(math.log(self.A_mag), self.neg_a_angle)

    @property
    def sqrt_neg_a_over_b(self) -> complex:
        """√(−A/B), 相位为 (arg(−A) − arg B)/2"""
        phase = 0.5 * (self.neg_a_angle - self.b_angle)
        return math.sqrt(self.A_mag / self.B_mag) * cmath.exp(1j * phase)

    def to_dict(self) -> dict:
        return {
            'A_mag': self.A_mag,
            'B_mag': self.B_mag,
            'a_quarter_turns': self.a_quarter_turns,
            'b_quarter_turns': self.b_quarter_turns,
        }
