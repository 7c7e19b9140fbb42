"""
命令行模块
Command-Line Module
"""

from .main import build_parser, main, run
from .output import OutputFormatter, significant

__all__ = ['build_parser', 'main', 'run', 'OutputFormatter', 'significant']
