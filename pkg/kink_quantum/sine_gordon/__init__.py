"""
Sin-Gordon 核心模块
Sine-Gordon Core Module
"""

from .jacobi import jacobi, jacobi_array, quarter_period, agm_sequence
from .profile import static_solution, profile_slope, potential_U, period
from .energy import classical_energy, kink_energy_density, integrated_kink_energy

__all__ = [
    'jacobi', 'jacobi_array', 'quarter_period', 'agm_sequence',
    'static_solution', 'profile_slope', 'potential_U', 'period',
    'classical_energy', 'kink_energy_density', 'integrated_kink_energy'
]
