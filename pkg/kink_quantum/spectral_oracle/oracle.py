"""
谱校验服务
Spectral Oracle Service
"""

import logging
import math
from typing import Dict, Tuple

import numpy as np

from ..exceptions import DomainError
from ..interfaces.spectral_oracle import ISpectralOracle
from ..models.operator import DiscreteOperator
from .operators import build_operators, count_below, eigen_spectrum
from .resolvent import numerical_resolvent_diag

TRUNCATION_LIMIT = 1e-14


class SpectralOracle(ISpectralOracle):
    """有限差分谱校验, 按 m 缓存扭结与真空算子的本征谱"""

    def __init__(self, half_width: float = 30.0, grid_step: float = 0.01):
        """
        初始化谱校验

        Args:
            half_width: 区间 [−L, L] 的半宽 L
            grid_step: 网格步长 h
        """
        if not (grid_step > 0 and half_width > grid_step):
            raise DomainError(f"网格参数无效: L={half_width!r}, h={grid_step!r}")
        self.half_width = half_width
        self.grid_step = grid_step
        self.logger = logging.getLogger(__name__)
        self._spectra: Dict[float, Tuple[np.ndarray, np.ndarray]] = {}

    def eigen_spectrum(self, op: DiscreteOperator) -> np.ndarray:
        return eigen_spectrum(op)

    def spectra(self, m: float) -> Tuple[np.ndarray, np.ndarray]:
        """(扭结谱, 真空谱)"""
        if m not in self._spectra:
            kink, vacuum = build_operators(m, self.half_width, self.grid_step)
            self.logger.info(f"对角化 {kink.n_points} 阶算子 (m={m}, h={self.grid_step})")
            self._spectra[m] = (self.eigen_spectrum(kink), self.eigen_spectrum(vacuum))
        return self._spectra[m]

    def heat_trace_diff(self, t: float, m: float) -> float:
        if not t > 0:
            raise DomainError(f"热核时间 t 必须为正数, 实际为 {t!r}")
        kink, vacuum = self.spectra(m)
        tail = math.exp(-kink[-1] * t)
        if tail > TRUNCATION_LIMIT:
            self.logger.warning(
                f"网格过粗: e^(−λ_max·t) = {tail:.2e} > {TRUNCATION_LIMIT:.0e} (t={t})"
            )
        return math.fsum(np.exp(-kink * t) - np.exp(-vacuum * t))

    def numerical_resolvent_diag(self, p: float, x: float, m: float, k: float = 1.0) -> float:
        return numerical_resolvent_diag(p, x, m, k, self.half_width, self.grid_step)

    def bound_state_count(self, m: float) -> int:
        """m² 以下的本征值个数之差 (扭结 − 真空)"""
        kink, vacuum = self.spectra(m)
        level = m * m
        return count_below(kink, level) - count_below(vacuum, level)


def heat_trace_diff(t: float, m: float, half_width: float = 30.0, grid_step: float = 0.01) -> float:
    """Σ e^{−λ_j t} − Σ e^{−λ⁰_j t}, 应与 erf(m√t) 一致"""
    return SpectralOracle(half_width, grid_step).heat_trace_diff(t, m)


def bound_state_count(m: float, half_width: float = 30.0, grid_step: float = 0.01) -> int:
    return SpectralOracle(half_width, grid_step).bound_state_count(m)
