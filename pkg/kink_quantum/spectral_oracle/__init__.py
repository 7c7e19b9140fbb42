"""
有限差分谱校验模块
Finite-Difference Spectral Oracle Module
"""

from .operators import kink_potential, vacuum_potential, build_operators, eigen_spectrum, count_below
from .resolvent import numerical_resolvent_diag, resolvent_on_grid
from .oracle import SpectralOracle, heat_trace_diff, bound_state_count

__all__ = [
    'kink_potential', 'vacuum_potential', 'build_operators', 'eigen_spectrum', 'count_below',
    'numerical_resolvent_diag', 'resolvent_on_grid',
    'SpectralOracle', 'heat_trace_diff', 'bound_state_count'
]
