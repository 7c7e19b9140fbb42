"""
Jacobi 椭圆函数 (AGM / 下降 Landen 变换)
Jacobi Elliptic Functions via the Arithmetic-Geometric Mean
"""

import math
from typing import List, Tuple, Union

import numpy as np

from ..exceptions import DomainError
from ..models.elliptic import JacobiTriple

AGM_TOLERANCE = 1e-15
MAX_AGM_STEPS = 64
# |u| 超过此值时 tanh/sech 已饱和
HYPERBOLIC_CLAMP = 700.0

ArrayLike = Union[float, np.ndarray]


def _check_modulus(k: float) -> float:
    k = float(k)
    if not 0.0 <= k <= 1.0 or math.isnan(k):
        raise DomainError(f"椭圆模数 k 必须在 [0, 1] 之间, 实际为 {k!r}")
    return k


def agm_sequence(k: float) -> Tuple[List[float], List[float]]:
    """
    a_0 = 1, b_0 = √(1−k²), c_0 = k 的 AGM 序列

    Returns:
        (a_n, c_n) 两个列表, 迭代到 |c_n| < 1e-15
    """
    a, b, c = 1.0, math.sqrt((1.0 - k) * (1.0 + k)), k
    a_values, c_values = [a], [c]
    for _ in range(MAX_AGM_STEPS):
        if abs(c) < AGM_TOLERANCE:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        a_values.append(a)
        c_values.append(c)
    return a_values, c_values


def quarter_period(k: float) -> float:
    """第一类完全椭圆积分 K(k) = π / (2·agm(1, k′))"""
    k = _check_modulus(k)
    if k == 1.0:
        return math.inf
    a_values, _ = agm_sequence(k)
    return math.pi / (2.0 * a_values[-1])


def jacobi_array(u: ArrayLike, k: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    对数组参数计算 (sn, cn, dn)(u; k)

    Args:
        u: 无量纲参数, 标量或数组
        k: 椭圆模数, [0, 1]

    Returns:
        三个与 u 同形状的数组
    """
    k = _check_modulus(k)
    u = np.asarray(u, dtype=float)

    if k == 0.0:
        return np.sin(u), np.cos(u), np.ones_like(u)
    if k == 1.0:
        clamped = np.clip(u, -HYPERBOLIC_CLAMP, HYPERBOLIC_CLAMP)
        sech = 1.0 / np.cosh(clamped)
        return np.tanh(clamped), sech, sech.copy()

    a_values, c_values = agm_sequence(k)
    n = len(a_values) - 1
    if n == 0:
        sn = np.sin(u)
        return sn, np.cos(u), np.sqrt(1.0 - (k * sn) ** 2)

    # 下降回代 φ_{n-1} = (φ_n + arcsin(c_n/a_n · sin φ_n)) / 2
    phi = (2.0 ** n) * a_values[n] * u
    previous = phi
    for level in range(n, 0, -1):
        previous = phi
        phi = 0.5 * (phi + np.arcsin(c_values[level] / a_values[level] * np.sin(phi)))

    sn = np.sin(phi)
    cn = np.cos(phi)
    dn = cn / np.cos(previous - phi)
    return sn, cn, dn


def jacobi(u: float, k: float) -> JacobiTriple:
    """单点 Jacobi 椭圆函数值"""
    sn, cn, dn = jacobi_array(float(u), k)
    return JacobiTriple(sn=float(sn), cn=float(cn), dn=float(dn))
