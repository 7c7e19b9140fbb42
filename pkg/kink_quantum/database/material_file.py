"""
材料数据文件编解码
Material Database File Codec

每行一条记录, 以空白分隔的 key=value 字段; '#' 开头为注释行。
文件中使用表格单位 (1e-26 kg, nm, GPa), 读入时换算为 SI 单位。
"""

from decimal import Decimal, InvalidOperation
from typing import Dict, Iterable, List, Tuple

from ..exceptions import MaterialParseError
from ..models.material import Material

# 字段名 -> (Material 属性, 十进制指数)
FIELD_SCALES: Dict[str, Tuple[str, int]] = {
    'atomic_mass_e26_kg': ('atomic_mass', -26),
    'lattice_const_nm': ('lattice_const', -9),
    'shear_modulus_GPa': ('shear_modulus', 9),
    'bulk_modulus_GPa': ('bulk_modulus', 9),
}
RECORD_FIELDS = ('name',) + tuple(FIELD_SCALES)


def _to_si(text: str, exponent: int, line_number: int, key: str) -> float:
    """十进制字符串按 10^exponent 换算, 只舍入一次"""
    try:
        value = Decimal(text)
    except InvalidOperation:
        raise MaterialParseError(f"字段 {key} 不是数字: {text!r}", line_number) from None
    if not value.is_finite():
        raise MaterialParseError(f"字段 {key} 必须为有限值", line_number)
    return float(value.scaleb(exponent))


def _from_si(value: float, exponent: int) -> str:
    """SI 数值换回表格单位, 使用最短十进制表示"""
    return format(Decimal(repr(float(value))).scaleb(-exponent).normalize(), 'f')


def parse_record(line: str, line_number: int) -> Material:
    """解析单行记录"""
    fields: Dict[str, str] = {}
    for token in line.split():
        key, sep, value = token.partition('=')
        if not sep or not key or not value:
            raise MaterialParseError(f"无法解析字段 {token!r}, 应为 key=value", line_number)
        if key not in RECORD_FIELDS:
            raise MaterialParseError(f"未知字段 {key!r}", line_number)
        if key in fields:
            raise MaterialParseError(f"字段 {key!r} 重复", line_number)
        fields[key] = value

    missing = [key for key in RECORD_FIELDS if key not in fields]
    if missing:
        raise MaterialParseError(f"缺少字段: {', '.join(missing)}", line_number)

    values = {
        attr: _to_si(fields[key], exponent, line_number, key)
        for key, (attr, exponent) in FIELD_SCALES.items()
    }
    return Material(name=fields['name'], **values)


def parse_materials(lines: Iterable[str]) -> List[Material]:
    """逐行解析材料记录, 跳过空行与注释"""
    materials: List[Material] = []
    seen = set()
    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        material = parse_record(line, line_number)
        if material.name in seen:
            raise MaterialParseError(f"材料 {material.name!r} 重复定义", line_number)
        seen.add(material.name)
        materials.append(material)
    return materials


def table_units(material: Material) -> Dict[str, float]:
    """材料常数换回表格单位, 与文件中的十进制值一致"""
    return {
        key: float(_from_si(getattr(material, attr), exponent))
        for key, (attr, exponent) in FIELD_SCALES.items()
    }


def format_record(material: Material) -> str:
    """将材料序列化为一行记录"""
    parts = [f"name={material.name}"]
    for key, (attr, exponent) in FIELD_SCALES.items():
        parts.append(f"{key}={_from_si(getattr(material, attr), exponent)}")
    return ' '.join(parts)


def dump_materials(materials: Iterable[Material], header: str = "") -> str:
    """序列化材料列表为文件内容"""
    lines = [f"# {line}" if line else "#" for line in header.splitlines()]
    lines.extend(format_record(material) for material in materials)
    return '\n'.join(lines) + '\n'
