"""
谱校验接口
Spectral Oracle Interface
"""

from abc import ABC, abstractmethod
import numpy as np
from ..models import DiscreteOperator


class ISpectralOracle(ABC):
    """有限差分谱校验接口"""

    @abstractmethod
    def eigen_spectrum(self, op: DiscreteOperator) -> np.ndarray:
        """
        计算离散算子的全部本征值

        Args:
            op: 离散算子

        Returns:
            升序本征值数组
        """
        pass

    @abstractmethod
    def heat_trace_diff(self, t: float, m: float) -> float:
        """
        扭结与真空算子的减除热迹

        Args:
            t: 热核时间
            m: 波数

        Returns:
            Σ e^{−λt} − Σ e^{−λ⁰t}
        """
        pass

    @abstractmethod
    def numerical_resolvent_diag(self, p: float, x: float, m: float) -> float:
        """
        数值对角预解式

        Args:
            p: 谱参数 (< 0)
            x: 坐标
            m: 波数

        Returns:
            G(p, x, x)
        """
        pass
