"""
材料数据仓库接口
Material Repository Interface
"""

from abc import ABC, abstractmethod
from typing import List
from ..models import Material


class IMaterialRepository(ABC):
    """材料数据仓库接口"""

    @abstractmethod
    def get_all(self) -> List[Material]:
        """
        获取全部材料

        Returns:
            按文件顺序排列的材料列表
        """
        pass

    @abstractmethod
    def get_by_name(self, name: str) -> Material:
        """
        根据名称获取材料

        Args:
            name: 材料名称 (大小写不敏感)

        Returns:
            材料对象
        """
        pass

    @abstractmethod
    def save(self, materials: List[Material]) -> None:
        """
        保存材料列表

        Args:
            materials: 材料列表
        """
        pass
