"""
位错线模型模块
Dislocation Line Module
"""

from .pair_potential import (
    pair_coeffs, kink_interaction_energy, interaction_from_positions, shifted_profile, shift_in_sites
)
from .fit import fit_G2
from .second_level import (
    effective_mass, effective_mass_paper_coefficient, interaction_samples, second_level_params,
    second_level_model, dislocation_kink_energy, kink_antikink_pair_energy
)

__all__ = [
    'pair_coeffs', 'kink_interaction_energy', 'interaction_from_positions', 'shifted_profile',
    'shift_in_sites', 'fit_G2',
    'effective_mass', 'effective_mass_paper_coefficient', 'interaction_samples',
    'second_level_params', 'second_level_model', 'dislocation_kink_energy',
    'kink_antikink_pair_energy'
]
