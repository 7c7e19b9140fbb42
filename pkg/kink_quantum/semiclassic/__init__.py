"""
半经典单圈修正模块
Semiclassical One-Loop Correction Module
"""

from .resolvent import (
    resolvent_polynomials, resolvent_value, resolvent_derivatives, hermit_residual,
    ode_residual, vacuum_resolvent, kink_resolvent, subtracted_trace_laplace,
    subtracted_trace_quadrature, symbolic_hermit_identity
)
from .zeta import (
    gamma_kink, gamma_time, zeta, zeta_prime_zero, series_coefficient,
    euclidean_heat_trace, mellin_zeta
)
from .pipeline import (
    QuantumEnergyPipeline, PipelineResult, quantum_correction, quantum_energy_pipeline,
    reference_chain_check
)

__all__ = [
    'resolvent_polynomials', 'resolvent_value', 'resolvent_derivatives', 'hermit_residual',
    'ode_residual', 'vacuum_resolvent', 'kink_resolvent', 'subtracted_trace_laplace',
    'subtracted_trace_quadrature', 'symbolic_hermit_identity',
    'gamma_kink', 'gamma_time', 'zeta', 'zeta_prime_zero', 'series_coefficient',
    'euclidean_heat_trace', 'mellin_zeta',
    'QuantumEnergyPipeline', 'PipelineResult', 'quantum_correction', 'quantum_energy_pipeline',
    'reference_chain_check'
]
