"""
材料数据仓库
Material Repository
"""

import logging
from pathlib import Path
from typing import List, Optional, Union

from ..exceptions import UnknownMaterialError
from ..interfaces.material_repository import IMaterialRepository
from ..models.material import Material
from .material_file import dump_materials, parse_materials

logger = logging.getLogger(__name__)

FILE_HEADER = (
    "Material constants, one record per line.\n"
    "Units: atomic mass 1e-26 kg, lattice constant nm, shear and bulk moduli GPa."
)


def load_materials(path: Union[str, Path]) -> List[Material]:
    """
    读取材料数据文件

    Args:
        path: 文件路径

    Returns:
        每条记录对应一个 Material
    """
    with open(path, encoding='utf-8') as handle:
        materials = parse_materials(handle)
    logger.info(f"从 {path} 读取了 {len(materials)} 种材料")
    return materials


class MaterialRepository(IMaterialRepository):
    """材料数据仓库, 负责材料文件的读取与保存"""

    def __init__(self, db_path: Union[str, Path]):
        """
        初始化材料仓库

        Args:
            db_path: 材料数据文件路径
        """
        self.db_path = Path(db_path)
        self.logger = logging.getLogger(__name__)
        self._materials: Optional[List[Material]] = None

    def _ensure_loaded(self) -> List[Material]:
        if self._materials is None:
            self._materials = load_materials(self.db_path)
        return self._materials

    def get_all(self) -> List[Material]:
        return list(self._ensure_loaded())

    def get_by_name(self, name: str) -> Material:
        wanted = name.strip().lower()
        for material in self._ensure_loaded():
            if material.name.lower() == wanted:
                return material
        raise UnknownMaterialError(name)

    def names(self) -> List[str]:
        return [material.name for material in self._ensure_loaded()]

    def save(self, materials: List[Material]) -> None:
        self.db_path.write_text(dump_materials(materials, FILE_HEADER), encoding='utf-8')
        self._materials = list(materials)
        self.logger.info(f"已保存 {len(materials)} 种材料到 {self.db_path}")

    def reload(self) -> List[Material]:
        """丢弃缓存并重新读取"""
        self._materials = None
        return self.get_all()
