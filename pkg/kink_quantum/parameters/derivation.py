"""
由材料常数推导 FK/SG 模型参数
Model Parameter Derivation
"""

import math

from ..models.material import Material, ModelMode, ModelParams

# ε = coefficient · a³ · M_s
EPSILON_COEFFICIENTS = {
    ModelMode.CROWDION: 2.0 / math.pi ** 2,
    ModelMode.DISLOCATION: 1.0 / (2.0 * math.pi ** 2),
}


def substrate_amplitude(mat: Material, mode: ModelMode) -> float:
    """基底势幅值 ε (J), 两种约定之比为 4"""
    a = mat.lattice_const
    return EPSILON_COEFFICIENTS[ModelMode.parse(mode)] * a ** 3 * mat.shear_modulus


def derive_params(mat: Material, mode: ModelMode) -> ModelParams:
    """
    推导模型参数

    Args:
        mat: 材料
        mode: ε 约定, 必须显式给出

    Returns:
        G = K·a, ε 与 m 按所选模式计算
    """
    mode = ModelMode.parse(mode)
    return ModelParams(
        G=mat.bulk_modulus * mat.lattice_const,
        epsilon=substrate_amplitude(mat, mode),
        a=mat.lattice_const,
        atom_mass=mat.atomic_mass,
        mode=mode,
    )


def sound_speed(p: ModelParams) -> float:
    """声速 c = √(a²G/M), m/s"""
    return math.sqrt(p.stiffness / p.atom_mass)
