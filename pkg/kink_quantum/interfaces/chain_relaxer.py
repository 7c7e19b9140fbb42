"""
FK链弛豫器接口
Chain Relaxer Interface
"""

from abc import ABC, abstractmethod
from typing import Callable, Optional
from ..models import ChainState, ModelParams, RelaxationConfig, RelaxationResult


class IChainRelaxer(ABC):
    """FK链弛豫器接口"""

    @abstractmethod
    def relax(self, state: ChainState, params: ModelParams, cfg: RelaxationConfig) -> ChainState:
        """
        将原子链弛豫到稳定 (或对称鞍点) 构型

        Args:
            state: 初始状态
            params: 模型参数
            cfg: 弛豫配置

        Returns:
            弛豫后的状态
        """
        pass

    @abstractmethod
    def relax_with_stats(self, state: ChainState, params: ModelParams, cfg: RelaxationConfig,
                         observer: Optional[Callable[[int, ChainState], None]] = None
                         ) -> RelaxationResult:
        """
        弛豫并返回迭代统计

        Args:
            state: 初始状态
            params: 模型参数
            cfg: 弛豫配置
            observer: 每步回调 (迭代序号, 当前状态), 可选

        Returns:
            弛豫结果
        """
        pass
