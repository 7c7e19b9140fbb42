"""
Frenkel-Kontorova 原子链模块
Frenkel-Kontorova Lattice Module
"""

from .chain import chain_energy, chain_energy_terms, chain_forces, sg_kink_initial, ground_state
from .relaxer import ChainRelaxer, relax
from .barrier import pn_barrier, pn_barrier_details, default_chain_length, required_chain_length

__all__ = [
    'chain_energy', 'chain_energy_terms', 'chain_forces', 'sg_kink_initial', 'ground_state',
    'ChainRelaxer', 'relax',
    'pn_barrier', 'pn_barrier_details', 'default_chain_length', 'required_chain_length'
]
