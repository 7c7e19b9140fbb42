"""
能量表计算演示脚本
Energy Table Demo Script
"""

from kink_quantum.cli.commands import build_table, crowdion_energies
from kink_quantum.config import Settings
from kink_quantum.database import MaterialRepository
from kink_quantum.dislocation import second_level_params
from kink_quantum.fk_lattice import pn_barrier_details
from kink_quantum.models import ModelMode, RelaxationConfig
from kink_quantum.parameters import derive_params


def demo_crowdion():
    """演示挤列子闭式能量"""
    print("=== 挤列子能量 ===")
    repo = MaterialRepository(Settings().database.db_path)
    for material in repo.get_all():
        e_c, de_c = crowdion_energies(material)
        print(f"{material.name}: E_c = {e_c:.4f} eV, ΔE_c = {de_c:.6f} eV")
    print()


def demo_pn_barrier():
    """演示 Ag 位错模式的 PN 势垒"""
    print("=== Ag PN 势垒 ===")
    repo = MaterialRepository(Settings().database.db_path)
    params = derive_params(repo.get_by_name("Ag"), ModelMode.DISLOCATION)
    result = pn_barrier_details(params, RelaxationConfig())
    print(f"m = {params.m_dimless:.4f}, 链长 {result.n_atoms}")
    print(f"ε₂ = {result.epsilon2:.4e} J")
    print(f"迭代次数: {result.iterations_site} (原子中心), {result.iterations_bond} (键中心)")

    slp = second_level_params(params, RelaxationConfig())
    print(f"G₂ = {slp.G2:.4e} N/m, M₂ = {slp.M2:.4e} kg")
    print()


def demo_full_table():
    """演示完整能量表"""
    print("=== 完整能量表 ===")
    settings = Settings()
    repo = MaterialRepository(settings.database.db_path)
    rows, errors = build_table(repo.get_all(), settings)
    print(f"{'材料':<6}{'E_d meV':>12}{'ΔE_d meV':>12}{'E_c eV':>10}{'ΔE_c eV':>10}")
    for row in rows:
        print(f"{row.material:<6}{row.E_d:>12.4f}{row.dE_d:>12.5f}{row.E_c:>10.4f}{row.dE_c:>10.4f}")
    for error in errors:
        print(f"✗ {error}")


if __name__ == "__main__":
    demo_crowdion()
    demo_pn_barrier()
    demo_full_table()
    print("✓ 演示完成")
