"""
子命令实现
Subcommand Implementations
"""

import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

import numpy as np
from scipy.constants import electron_volt
from scipy.special import erf

from ..config.settings import Settings
from ..database.material_file import RECORD_FIELDS, table_units
from ..database.material_repository import MaterialRepository
from ..dislocation.second_level import (
    dislocation_kink_energy, effective_mass, effective_mass_paper_coefficient, second_level_params
)
from ..exceptions import KinkQuantumError
from ..fk_lattice.barrier import pn_barrier_details, required_chain_length
from ..fk_lattice.chain import sg_kink_initial
from ..fk_lattice.relaxer import ChainRelaxer
from ..models.chain import RelaxationConfig
from ..models.dislocation import MassConvention
from ..models.elliptic import EllipticSolution
from ..models.material import Material, ModelMode, ModelParams
from ..models.report import ReportRow
from ..models.spectral import RegularizationParams
from ..parameters.derivation import derive_params
from ..semiclassic.pipeline import QuantumEnergyPipeline, quantum_correction
from ..sine_gordon.energy import classical_energy
from ..sine_gordon.profile import potential_U, static_solution
from ..spectral_oracle.oracle import SpectralOracle
from .output import OutputFormatter

logger = logging.getLogger(__name__)

MEV = 1e-3 * electron_volt
MATERIAL_COLUMNS = list(RECORD_FIELDS)
TABLE_COLUMNS = ['material', 'E_d_meV', 'dE_d_meV', 'E_c_eV', 'dE_c_eV']


def relaxation_config(settings: Settings) -> RelaxationConfig:
    defaults = settings.relaxation
    return RelaxationConfig(dt=defaults.dt, tol=defaults.tol, max_iter=defaults.max_iter)


def chain_length(settings: Settings, p: ModelParams) -> int:
    """max(min_chain, ⌈chain_width_factor/m⌉)"""
    defaults = settings.relaxation
    return max(defaults.min_chain, required_chain_length(p.m_dimless, defaults.chain_width_factor))


def crowdion_energies(material: Material) -> Tuple[float, float]:
    """挤列子 (E_c, ΔE_c), 单位 eV"""
    p = derive_params(material, ModelMode.CROWDION)
    return classical_energy(p) / electron_volt, quantum_correction(p) / electron_volt


def report_row(material: Material, settings: Settings) -> ReportRow:
    """一种材料的完整报告行, 位错列来自数值流程"""
    e_c, de_c = crowdion_energies(material)
    p = derive_params(material, ModelMode.DISLOCATION)
    slp = second_level_params(
        p, relaxation_config(settings),
        mass_convention=settings.dislocation.mass_convention,
        shift_range=settings.dislocation.shift_range,
        row_spacing_factor=settings.dislocation.row_spacing_factor,
        n=chain_length(settings, p),
    )
    e_d, de_d = dislocation_kink_energy(slp)
    return ReportRow(material=material.name, E_d=e_d / MEV, dE_d=de_d / MEV, E_c=e_c, dE_c=de_c)


def _safe_report_row(job: Tuple[Material, Settings]) -> Tuple[Optional[ReportRow], Optional[str]]:
    material, settings = job
    try:
        return report_row(material, settings), None
    except (KinkQuantumError, ValueError) as exc:
        return None, f"{material.name}: {exc}"


def resolve_workers(workers: Optional[int], n_jobs: int) -> int:
    """未指定时每种材料一个进程, 不超过 CPU 数"""
    if workers is None:
        workers = min(n_jobs, os.cpu_count() or 1)
    return max(1, workers)


def build_table(materials: List[Material], settings: Settings, strict: bool = False,
                workers: Optional[int] = None) -> Tuple[List[ReportRow], List[str]]:
    """
    逐材料生成报告行, 保持输入顺序

    Args:
        materials: 材料列表
        settings: 配置
        strict: 遇到第一个错误即抛出
        workers: 进程数; None 表示每种材料一个进程, 1 表示在当前进程中计算

    Returns:
        (报告行, 错误信息)
    """
    workers = resolve_workers(workers, len(materials))
    if strict:
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                return list(pool.map(report_row, materials, [settings] * len(materials))), []
        return [report_row(material, settings) for material in materials], []

    jobs = [(material, settings) for material in materials]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_safe_report_row, jobs))
    else:
        outcomes = [_safe_report_row(job) for job in jobs]

    rows = [row for row, _ in outcomes if row is not None]
    errors = [error for _, error in outcomes if error is not None]
    for error in errors:
        logger.error(f"材料计算失败: {error}")
    return rows, errors


def cmd_materials(repository: MaterialRepository, formatter: OutputFormatter) -> str:
    records = [{'name': m.name, **table_units(m)} for m in repository.get_all()]
    return formatter.render_table(formatter.frame(records, MATERIAL_COLUMNS))


def cmd_table(repository: MaterialRepository, settings: Settings, formatter: OutputFormatter,
              strict: bool = False) -> Tuple[str, List[str]]:
    rows, errors = build_table(repository.get_all(), settings, strict=strict,
                               workers=settings.output.workers)
    text = formatter.render_table(formatter.frame([row.to_dict() for row in rows], TABLE_COLUMNS))
    return text, errors


def cmd_correction(material: Material, mode: ModelMode, settings: Settings, formatter: OutputFormatter,
                   T: Optional[float] = None, untie_r: Optional[float] = None) -> str:
    p = derive_params(material, mode)
    T = settings.regularization.time_scale_s if T is None else T
    factor = untie_r if untie_r is not None else settings.regularization.untie_factor
    reg = (RegularizationParams.tied(p, T) if factor is None
           else RegularizationParams.untied(p, T, factor))
    result = QuantumEnergyPipeline(p, reg).evaluate()
    return formatter.render_object({
        'E_c_eV': result.classical / electron_volt,
        'dE_eV': quantum_correction(p) / electron_volt,
        'E_q_eV': result.energy.real / electron_volt,
        'T_s': float(reg.T),
        'r': float(reg.r),
    })


def cmd_dislocation(material: Material, settings: Settings, formatter: OutputFormatter,
                    mass_convention: Optional[str] = None) -> str:
    p = derive_params(material, ModelMode.DISLOCATION)
    convention = MassConvention(mass_convention or settings.dislocation.mass_convention)
    slp = second_level_params(
        p, relaxation_config(settings), mass_convention=convention,
        shift_range=settings.dislocation.shift_range,
        row_spacing_factor=settings.dislocation.row_spacing_factor,
        n=chain_length(settings, p),
    )
    e_d, de_d = dislocation_kink_energy(slp)
    return formatter.render_object({
        'epsilon2': slp.epsilon2,
        'G2': slp.G2,
        'M2_defining': effective_mass(p),
        'M2_paper_coefficient': effective_mass_paper_coefficient(p),
        'E_d_meV': e_d / MEV,
        'dE_d_meV': de_d / MEV,
    })


def cmd_pn_barrier(material: Material, mode: ModelMode, settings: Settings,
                   formatter: OutputFormatter) -> str:
    p = derive_params(material, mode)
    result = pn_barrier_details(p, relaxation_config(settings), chain_length(settings, p))
    return formatter.render_object({
        'epsilon2_J': result.epsilon2,
        'epsilon2_meV': result.epsilon2 / MEV,
        'n': result.n_atoms,
        'iterations_site': result.iterations_site,
        'iterations_bond': result.iterations_bond,
    })


def cmd_profile(material: Material, mode: ModelMode, k: float, x_range: Tuple[float, float],
                samples: int, formatter: OutputFormatter) -> str:
    p = derive_params(material, mode)
    sol = EllipticSolution(k=k, m=p.m_dimless)
    x = np.linspace(x_range[0], x_range[1], samples)
    records = [
        {'x_prime': float(xi), 'phi': float(phi), 'U': float(u)}
        for xi, phi, u in zip(x, static_solution(x, sol), potential_U(x, sol))
    ]
    header = f"material={material.name} mode={mode.value} k={k} m={p.m_dimless:.10g}"
    return formatter.render_table(formatter.frame(records, ['x_prime', 'phi', 'U']), header)


def cmd_relax_dump(material: Material, mode: ModelMode, center: str, settings: Settings,
                   formatter: OutputFormatter) -> str:
    p = derive_params(material, mode)
    n = chain_length(settings, p)
    n = n if n % 2 == 1 else n + 1
    if center == 'bond':
        n += 1
    state = sg_kink_initial(n, (n - 1) / 2, p)
    relaxed = ChainRelaxer().relax(state, p, relaxation_config(settings))
    records = [{'site': i, 'phi': float(phi)} for i, phi in enumerate(relaxed.displacements)]
    header = f"material={material.name} mode={mode.value} center={center} n={n}"
    return formatter.render_table(formatter.frame(records, ['site', 'phi']), header)


def cmd_spectrum_check(m: float, half_width: float, grid_step: float, t_values,
                       formatter: OutputFormatter) -> str:
    oracle = SpectralOracle(half_width, grid_step)
    records = []
    for t in t_values:
        numeric = oracle.heat_trace_diff(t, m)
        analytic = float(erf(m * math.sqrt(t)))
        records.append({
            't': float(t),
            'trace_numeric': numeric,
            'trace_analytic': analytic,
            'rel_error': abs(numeric - analytic) / analytic,
        })
    header = f"m={m} L={half_width} h={grid_step}"
    return formatter.render_table(
        formatter.frame(records, ['t', 'trace_numeric', 'trace_analytic', 'rel_error']), header
    )
