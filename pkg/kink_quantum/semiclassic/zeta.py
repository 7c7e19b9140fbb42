"""
热核 γ 函数与广义 ζ 函数
Heat-Kernel Gamma Functions and Generalized Zeta Function
"""

import cmath
import math
from typing import Union

import numpy as np
from scipy.integrate import quad
from scipy.special import erf, erfc, gamma as gamma_function

from ..exceptions import DomainError
from ..models.spectral import SpectralPrefactors

ArrayLike = Union[float, np.ndarray]
# Mellin 校验在整数点取对称差分的半步长
INTEGER_STEP = 1e-4
QUAD_OPTIONS = {'epsabs': 1e-10, 'epsrel': 1e-11, 'limit': 400}


def gamma_kink(t: ArrayLike, m: float) -> ArrayLike:
    """
    扭结算子相对真空的减除热迹 h(t) = erf(m√t)

    Args:
        t: 热核时间 > 0
        m: 波数

    Returns:
        含束缚态 (零模) 的减除热迹
    """
    t_arr = np.asarray(t, dtype=float)
    if np.any(~(t_arr > 0)):
        raise DomainError("热核时间 t 必须为正数")
    values = erf(m * np.sqrt(t_arr))
    return float(values) if np.ndim(t) == 0 else values


def gamma_time(y: ArrayLike, B_mag: float) -> ArrayLike:
    """时间方向算子的热迹 (1/2π)√(π/(B·y))"""
    if not B_mag > 0:
        raise DomainError(f"|B| 必须为正数, 实际为 {B_mag!r}")
    y_arr = np.asarray(y, dtype=float)
    if np.any(~(y_arr > 0)):
        raise DomainError("热核时间 y 必须为正数")
    values = np.sqrt(math.pi / (B_mag * y_arr)) / (2.0 * math.pi)
    return float(values) if np.ndim(y) == 0 else values


def _check_half_plane(s: complex) -> complex:
    s = complex(s)
    if s.real >= 0.5:
        raise DomainError(f"Re(s) 必须小于 1/2 (Mellin 积分发散), 实际为 {s.real!r}")
    return s


def zeta(s: complex, pre: SpectralPrefactors, m: float) -> complex:
    """
    闭式 ζ(s) = m^{1−2s}(−A)^{−s}/π · √(−A/B) / (1−2s)

    (−A)^{−s} 与 √(−A/B) 的分支由 pre 的相位计数确定
    """
    s = _check_half_plane(s)
    power = cmath.exp(-s * pre.log_neg_a)
    return m ** (1.0 - 2.0 * s) * power / math.pi * pre.sqrt_neg_a_over_b / (1.0 - 2.0 * s)


def zeta_prime_zero(pre: SpectralPrefactors, m: float) -> complex:
    """ζ′(0) = (m/π)√(−A/B)(2 − 2 ln m − ln(−A))"""
    return (m / math.pi) * pre.sqrt_neg_a_over_b * (2.0 - 2.0 * math.log(m) - pre.log_neg_a)


def series_coefficient(n: int, pre: SpectralPrefactors, m: float) -> float:
    """欧氏 γ(y) = Σ c_n yⁿ 的系数, c_n = (m√A)^{2n+1}(−1)ⁿ / (π√B·n!·(2n+1))"""
    x = m * math.sqrt(pre.A_mag)
    return (-1) ** n * x ** (2 * n + 1) / (math.pi * math.sqrt(pre.B_mag) * math.factorial(n) * (2 * n + 1))


def euclidean_heat_trace(y: float, pre: SpectralPrefactors, m: float) -> float:
    """γ(y) = erf(m√(|A|y)) / (2√(π|B|y))"""
    return erf(m * math.sqrt(pre.A_mag * y)) / (2.0 * math.sqrt(math.pi * pre.B_mag * y))


def _scaled_remainder(y: float, n_terms: int, pre: SpectralPrefactors, m: float) -> float:
    """(γ(y) − Σ_{n<N} c_n yⁿ) / y^N, 小参数时直接对级数尾项求和"""
    if m * m * pre.A_mag * y < 1.0:
        total, n = 0.0, n_terms
        while True:
            term = series_coefficient(n, pre, m) * y ** (n - n_terms)
            total += term
            if abs(term) <= 1e-17 * abs(total) or n > n_terms + 80:
                return total
            n += 1
    head = sum(series_coefficient(n, pre, m) * y ** n for n in range(n_terms))
    return (euclidean_heat_trace(y, pre, m) - head) / y ** n_terms


def _mellin_gamma_product(s: float, pre: SpectralPrefactors, m: float) -> float:
    """Γ(s)·ζ(s) 的 Mellin 积分, 用减去级数项的方式延拓到 s ≤ 0"""
    n_terms = max(0, math.ceil(0.5 - s))

    # ∫₀¹ y^{s−1}(γ − Σ c_n yⁿ) dy, 代换 y = e^{−v}
    head, _ = quad(lambda v: math.exp(-(s + n_terms) * v) * _scaled_remainder(math.exp(-v), n_terms, pre, m),
                   0.0, np.inf, **QUAD_OPTIONS)
    poles = sum(series_coefficient(n, pre, m) / (s + n) for n in range(n_terms))

    # ∫₁^∞ y^{s−1}γ dy, erf = 1 − erfc 的常数部分解析积分
    prefactor = 1.0 / (2.0 * math.sqrt(math.pi * pre.B_mag))
    x = m * math.sqrt(pre.A_mag)
    tail_correction, _ = quad(lambda y: y ** (s - 1.5) * erfc(x * math.sqrt(y)),
                              1.0, np.inf, **QUAD_OPTIONS)
    tail = prefactor * (1.0 / (0.5 - s) - tail_correction)
    return head + poles + tail


def mellin_zeta(s: float, pre: SpectralPrefactors, m: float) -> float:
    """
    数值 Mellin 变换得到的 ζ(s), 仅作为闭式的校验

    只使用 |A|, |B| (欧氏相位); 非正整数点取 s±δ 的平均值。
    适用于 m²|A| 不太大 (约 10 以内) 的情形。

    Args:
        s: 实数, s < 1/2
        pre: 前置因子
        m: 波数

    Returns:
        ζ(s) 的实数值
    """
    s = _check_half_plane(s).real
    if s <= 0 and float(s).is_integer():
        values = [_mellin_gamma_product(s + d, pre, m) / gamma_function(s + d)
                  for d in (-INTEGER_STEP, INTEGER_STEP)]
        return 0.5 * (values[0] + values[1])
    return _mellin_gamma_product(s, pre, m) / gamma_function(s)
