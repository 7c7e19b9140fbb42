"""
配置模块
Configuration Module
"""

from .settings import (
    Settings, DatabaseConfig, RelaxationDefaults, RegularizationDefaults,
    OracleConfig, DislocationConfig, OutputConfig, BUNDLED_DB_PATH
)

__all__ = [
    'Settings', 'DatabaseConfig', 'RelaxationDefaults', 'RegularizationDefaults',
    'OracleConfig', 'DislocationConfig', 'OutputConfig', 'BUNDLED_DB_PATH'
]
