"""
G2 最小二乘拟合
Harmonic Coefficient Fit
"""

from typing import Sequence, Tuple

import numpy as np

from ..exceptions import DegenerateFitError

MIN_SAMPLES = 3


def fit_G2(samples: Sequence[Tuple[float, float]]) -> Tuple[float, float]:
    """
    以单参数模型 (G2/2)ΔX² 拟合相互作用能

    Args:
        samples: (ΔX m, 能量 J) 列表, 至少 3 个且 ΔX 互不相同

    Returns:
        (G2 N/m, 残差范数 J)
    """
    if len(samples) < MIN_SAMPLES:
        raise DegenerateFitError(f"至少需要 {MIN_SAMPLES} 个样本, 实际为 {len(samples)}")
    data = np.asarray(samples, dtype=float)
    delta_x, energy = data[:, 0], data[:, 1]
    if np.unique(delta_x).size != delta_x.size:
        raise DegenerateFitError("ΔX 取值必须互不相同")
    if not np.any(delta_x != 0.0):
        raise DegenerateFitError("所有 ΔX 均为零, 无法拟合")

    design = 0.5 * delta_x ** 2
    solution, _, _, _ = np.linalg.lstsq(design[:, np.newaxis], energy, rcond=None)
    g2 = float(solution[0])
    residual = float(np.linalg.norm(design * g2 - energy))
    return g2, residual
