"""
材料数据库模块
Material Database Module
"""

from .material_file import parse_materials, parse_record, format_record, dump_materials, table_units
from .material_repository import MaterialRepository, load_materials

__all__ = [
    'MaterialRepository', 'load_materials',
    'parse_materials', 'parse_record', 'format_record', 'dump_materials', 'table_units'
]
