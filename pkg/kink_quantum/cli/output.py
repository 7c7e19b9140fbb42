"""
命令行输出格式化
Command-Line Output Formatting
"""

import json
from typing import Dict, Iterable, Optional

import pandas as pd

from ..config.settings import OutputConfig


def significant(value: float, digits: int) -> float:
    """保留 digits 位有效数字"""
    return float(f"{value:.{digits}g}")


class OutputFormatter:
    """按 OutputConfig 输出表格与 JSON 对象"""

    def __init__(self, config: OutputConfig):
        self.config = config

    def number(self, value: float) -> float:
        if self.config.full_precision:
            return float(value)
        return significant(value, self.config.significant_figures)

    def round_record(self, record: Dict[str, object]) -> Dict[str, object]:
        """浮点字段按有效数字取整, 其余原样保留"""
        return {
            key: self.number(value) if isinstance(value, float) else value
            for key, value in record.items()
        }

    def frame(self, records: Iterable[Dict[str, object]], columns: Optional[list] = None) -> pd.DataFrame:
        return pd.DataFrame([self.round_record(record) for record in records], columns=columns)

    def render_table(self, df: pd.DataFrame, header: Optional[str] = None) -> str:
        """csv 或 json (records) 文本; csv 可带一行 '#' 注释头"""
        if self.config.output_format == 'json':
            return df.to_json(orient='records', double_precision=15)
        body = df.to_csv(index=False, lineterminator='\n')
        return f"# {header}\n{body}" if header else body

    def render_object(self, record: Dict[str, object]) -> str:
        return json.dumps(self.round_record(record), ensure_ascii=False)
