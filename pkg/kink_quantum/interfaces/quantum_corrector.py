"""
量子修正计算器接口
Quantum Corrector Interface
"""

from abc import ABC, abstractmethod


class IQuantumCorrector(ABC):
    """单圈量子能量计算接口"""

    @abstractmethod
    def evaluate(self):
        """
        执行完整计算

        Returns:
            包含 ζ(0), ζ′(0), 原始能量与抵消项的结果对象
        """
        pass

    @abstractmethod
    def quantum_energy(self) -> float:
        """
        计算量子能量

        Returns:
            E_q, 单位 J
        """
        pass
