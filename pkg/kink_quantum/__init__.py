"""
Sine-Gordon 扭结经典能量与单圈量子修正
Sine-Gordon Kink Classical Energies and One-Loop Quantum Corrections
"""

from .models import Material, ModelMode, ModelParams, ReportRow
from .parameters import derive_params
from .exceptions import KinkQuantumError
from .config import Settings

__version__ = "1.0.0"
__author__ = "Kink Quantum Team"

__all__ = [
    # 数据模型
    'Material', 'ModelMode', 'ModelParams', 'ReportRow',
    # 参数推导
    'derive_params',
    # 异常与配置
    'KinkQuantumError', 'Settings'
]
