"""
模型参数推导模块
Model Parameter Derivation Module
"""

from .derivation import derive_params, sound_speed, substrate_amplitude, EPSILON_COEFFICIENTS

__all__ = ['derive_params', 'sound_speed', 'substrate_amplitude', 'EPSILON_COEFFICIENTS']
