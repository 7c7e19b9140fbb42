"""
数据模型模块
Data Models Module
"""

from .material import Material, ModelMode, ModelParams
from .elliptic import EllipticSolution, JacobiTriple
from .spectral import ResolventDiagonal, RegularizationParams, SpectralPrefactors
from .chain import (
    CenterClass, ChainState, RelaxationConfig, RelaxationResult, PNBarrierResult
)
from .dislocation import MassConvention, PairPotentialCoeffs, SecondLevelParams
from .operator import DiscreteOperator
from .report import ReportRow

__all__ = [
    'Material', 'ModelMode', 'ModelParams',
    'EllipticSolution', 'JacobiTriple',
    'ResolventDiagonal', 'RegularizationParams', 'SpectralPrefactors',
    'CenterClass', 'ChainState', 'RelaxationConfig', 'RelaxationResult', 'PNBarrierResult',
    'MassConvention', 'PairPotentialCoeffs', 'SecondLevelParams',
    'DiscreteOperator',
    'ReportRow',
]
