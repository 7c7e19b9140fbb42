"""
临界阻尼弛豫
Critically Damped Chain Relaxation
"""

import logging
from typing import Callable, Optional

import numpy as np

from ..exceptions import ConvergenceError
from ..interfaces.chain_relaxer import IChainRelaxer
from ..models.chain import ChainState, RelaxationConfig, RelaxationResult
from ..models.material import ModelParams
from .chain import chain_energy, chain_forces

PROGRESS_INTERVAL = 100_000

Observer = Callable[[int, ChainState], None]


class ChainRelaxer(IChainRelaxer):
    """显式梯度下降: φ_i ← φ_i + [Δφ_i − (επ/(a²G)) sin 2πφ_i]·dt, 边界原子不动"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def relax(self, state: ChainState, params: ModelParams, cfg: RelaxationConfig) -> ChainState:
        return self.relax_with_stats(state, params, cfg).state

    def relax_with_stats(self, state: ChainState, params: ModelParams, cfg: RelaxationConfig,
                         observer: Optional[Observer] = None) -> RelaxationResult:
        phi = np.array(state.displacements, dtype=float)
        coefficient = params.substrate_coefficient
        change = float('inf')

        for iteration in range(1, cfg.max_iter + 1):
            step = chain_forces(phi, coefficient) * cfg.dt
            phi[1:-1] += step
            change = float(np.max(np.abs(step))) if step.size else 0.0

            if observer is not None:
                observer(iteration, state.with_displacements(phi))
            if iteration % PROGRESS_INTERVAL == 0:
                self.logger.debug(f"弛豫第 {iteration} 步, 最大位移变化 {change:.3e}")

            if change < cfg.tol:
                relaxed = state.with_displacements(phi)
                energy = chain_energy(relaxed, params)
                self.logger.info(
                    f"弛豫收敛: {iteration} 步, 残差 {change:.3e}, 能量 {energy:.6e} J"
                )
                return RelaxationResult(state=relaxed, iterations=iteration,
                                        residual=change, energy=energy)

        raise ConvergenceError(cfg.max_iter, change)


_default_relaxer = ChainRelaxer()


def relax(s: ChainState, p: ModelParams, cfg: RelaxationConfig) -> ChainState:
    """弛豫到力残差低于 tol/dt 的状态"""
    return _default_relaxer.relax(s, p, cfg)
