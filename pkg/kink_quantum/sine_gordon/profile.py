"""
静态 Sin-Gordon 解与势能
Static Sine-Gordon Solutions and Fluctuation Potential
"""

import math
from typing import Union

import numpy as np

from ..models.elliptic import EllipticSolution
from .jacobi import HYPERBOLIC_CLAMP, jacobi_array, quarter_period

ArrayLike = Union[float, np.ndarray]


def _as_output(values: np.ndarray, template) -> ArrayLike:
    """标量输入返回 float"""
    return float(values) if np.ndim(template) == 0 else values


def _scaled_argument(x_prime: ArrayLike, sol: EllipticSolution) -> np.ndarray:
    return sol.m * (np.asarray(x_prime, dtype=float) - sol.center)


def static_solution(x_prime: ArrayLike, sol: EllipticSolution) -> ArrayLike:
    """
    静态解 φ(x′) = (1/π)·arcsin(k·sn(m(x′−x₀); k)) + 1/2

    k<1 时 |k·sn| ≤ k < 1, 主值分支即连续; k=1 时写作 arctan(sinh) 以避免饱和区的精度损失
    """
    u = _scaled_argument(x_prime, sol)
    if sol.is_kink:
        gd = np.arctan(np.sinh(np.clip(u, -HYPERBOLIC_CLAMP, HYPERBOLIC_CLAMP)))
        values = gd / math.pi + 0.5
    else:
        sn, _, _ = jacobi_array(u, sol.k)
        values = np.arcsin(sol.k * sn) / math.pi + 0.5
    return _as_output(values, x_prime)


def profile_slope(x_prime: ArrayLike, sol: EllipticSolution) -> ArrayLike:
    """φ′(x′) = (k·m/π)·cn(m x̃; k)"""
    u = _scaled_argument(x_prime, sol)
    _, cn, _ = jacobi_array(u, sol.k)
    return _as_output(sol.k * sol.m * cn / math.pi, x_prime)


def potential_U(x_prime: ArrayLike, sol: EllipticSolution) -> ArrayLike:
    """
    涨落势 U(x′) = m²(2k² − 1 − 2k²·cn²(m x̃; k))

    k=1 时为 m²(1 − 2 sech²(m x̃))
    """
    u = _scaled_argument(x_prime, sol)
    _, cn, _ = jacobi_array(u, sol.k)
    k2 = sol.k * sol.k
    values = sol.m ** 2 * (2.0 * k2 - 1.0 - 2.0 * k2 * cn * cn)
    return _as_output(values, x_prime)


def period(sol: EllipticSolution) -> float:
    """k<1 时 φ 的空间周期 4K(k)/m"""
    return 4.0 * quarter_period(sol.k) / sol.m
