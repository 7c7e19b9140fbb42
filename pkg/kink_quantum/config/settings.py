"""
应用设置配置
Application Settings Configuration
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, List, Optional, Tuple, TypeVar
import os

from dotenv import load_dotenv

BUNDLED_DB_PATH = Path(__file__).resolve().parent.parent / "database" / "materials.db"
T = TypeVar('T')


def _env_number(name: str, cast: Callable[[str], T]) -> Optional[T]:
    """读取数值环境变量, 未设置或为空时返回 None"""
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return None
    try:
        return cast(raw)
    except ValueError:
        raise ValueError(f"环境变量 {name} 不是有效数值: {raw!r}") from None


@dataclass
class DatabaseConfig:
    """材料数据库配置"""
    db_path: str = str(BUNDLED_DB_PATH)


@dataclass
class RelaxationDefaults:
    """FK链弛豫默认值"""
    dt: float = 0.2
    tol: float = 1e-12
    max_iter: int = 10_000_000
    min_chain: int = 201
    chain_width_factor: float = 80.0  # n ≥ chain_width_factor / m


@dataclass
class RegularizationDefaults:
    """ζ 函数正规化默认值"""
    time_scale_s: float = 1e-12
    untie_factor: Optional[float] = None


@dataclass
class OracleConfig:
    """谱校验网格配置"""
    half_width: float = 30.0
    grid_step: float = 0.01
    t_values: Tuple[float, ...] = (0.1, 0.25, 1.0, 4.0, 10.0)


@dataclass
class DislocationConfig:
    """第二层位错模型配置"""
    shift_range: int = 8  # ΔX = a … shift_range·a
    row_spacing_factor: float = 1.0  # 相邻原子列间距 (单位 a)
    mass_convention: str = "defining"


@dataclass
class OutputConfig:
    """命令行输出配置"""
    output_format: str = "csv"
    significant_figures: int = 4
    full_precision: bool = False
    workers: Optional[int] = None  # None: 每种材料一个进程, 不超过 CPU 数
    log_level: str = "WARNING"


@dataclass
class Settings:
    """应用主配置类"""
    database: DatabaseConfig = None
    relaxation: RelaxationDefaults = None
    regularization: RegularizationDefaults = None
    oracle: OracleConfig = None
    dislocation: DislocationConfig = None
    output: OutputConfig = None

    def __post_init__(self):
        if self.database is None:
            self.database = DatabaseConfig()
        if self.relaxation is None:
            self.relaxation = RelaxationDefaults()
        if self.regularization is None:
            self.regularization = RegularizationDefaults()
        if self.oracle is None:
            self.oracle = OracleConfig()
        if self.dislocation is None:
            self.dislocation = DislocationConfig()
        if self.output is None:
            self.output = OutputConfig()

    @classmethod
    def from_env(cls, dotenv_path: Optional[str] = None) -> 'Settings':
        """从环境变量 (及 .env 文件) 创建配置"""
        load_dotenv(dotenv_path)

        database = DatabaseConfig(
            db_path=os.getenv('KINK_QUANTUM_DB', str(BUNDLED_DB_PATH))
        )
        time_scale = _env_number('KINK_QUANTUM_TIME_SCALE', float)
        regularization = RegularizationDefaults(
            time_scale_s=1e-12 if time_scale is None else time_scale
        )
        output = OutputConfig(
            workers=_env_number('KINK_QUANTUM_WORKERS', int),
            log_level=os.getenv('KINK_QUANTUM_LOG_LEVEL', 'WARNING').upper(),
        )

        return cls(database=database, regularization=regularization, output=output)

    def validate(self) -> List[str]:
        """验证配置并返回错误信息"""
        errors = []

        if not Path(self.database.db_path).is_file():
            errors.append(f"材料数据库文件不存在: {self.database.db_path}")

        if not 0 < self.relaxation.dt <= 0.4:
            errors.append("弛豫步长 dt 必须在 (0, 0.4] 之间")
        if self.relaxation.tol <= 0:
            errors.append("弛豫收敛阈值必须大于0")
        if self.relaxation.min_chain < 5:
            errors.append("链长至少为5个原子")

        if self.regularization.time_scale_s <= 0:
            errors.append("时间尺度 T 必须大于0")
        if self.regularization.untie_factor is not None and self.regularization.untie_factor <= 0:
            errors.append("缩放因子倍数必须大于0")

        if self.oracle.grid_step <= 0 or self.oracle.half_width <= self.oracle.grid_step:
            errors.append("谱校验网格参数无效")

        if self.dislocation.shift_range < 3:
            errors.append("G2 拟合至少需要3个位移采样点")
        if self.dislocation.mass_convention not in ("defining", "paper"):
            errors.append("有效质量约定必须为 defining 或 paper")

        if self.output.output_format not in ("csv", "json"):
            errors.append("输出格式必须为 csv 或 json")
        if self.output.significant_figures < 1:
            errors.append("有效数字位数必须大于0")
        if self.output.workers is not None and self.output.workers < 1:
            errors.append("工作进程数必须大于0")

        return errors
