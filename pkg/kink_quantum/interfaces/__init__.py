"""
核心接口模块
Core Interfaces Module
"""

from .material_repository import IMaterialRepository
from .chain_relaxer import IChainRelaxer
from .quantum_corrector import IQuantumCorrector
from .spectral_oracle import ISpectralOracle

__all__ = ['IMaterialRepository', 'IChainRelaxer', 'IQuantumCorrector', 'ISpectralOracle']
