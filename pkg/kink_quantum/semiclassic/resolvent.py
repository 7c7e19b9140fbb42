"""
对角预解式与 Hermit 型方程残差
Diagonal Resolvent and Hermit-Type ODE Residual
"""

import math
from typing import Tuple, Union

import numpy as np
import sympy
from scipy.integrate import quad

from ..exceptions import DomainError, SingularityError
from ..models.spectral import ResolventDiagonal
from ..sine_gordon.jacobi import jacobi_array

ArrayLike = Union[float, np.ndarray]
EXCLUSION_RADIUS = 1e-6  # 以 m² 为单位


def resolvent_polynomials(k: float, m: float) -> ResolventDiagonal:
    """
    构造 G(p, z) = P/(2√Q) 的多项式对

    Args:
        k: 椭圆模数 [0, 1]
        m: 波数 > 0

    Returns:
        ResolventDiagonal
    """
    if not 0.0 <= k <= 1.0:
        raise DomainError(f"椭圆模数 k 必须在 [0, 1] 之间, 实际为 {k!r}")
    if not m > 0:
        raise DomainError(f"波数 m 必须为正数, 实际为 {m!r}")
    return ResolventDiagonal(k=float(k), m=float(m))


def _z_substitution(res: ResolventDiagonal, x: ArrayLike) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    z = cn²(mx; k) 及其导数

    z′² = 4m²f(z), z″ = 2m²f′(z), f(z) = −k²z³ + (2k²−1)z² + (1−k²)z
    """
    k2, m = res.k ** 2, res.m
    sn, cn, dn = jacobi_array(m * np.asarray(x, dtype=float), res.k)
    z = cn * cn
    dz = -2.0 * m * sn * cn * dn
    f_prime = -3.0 * k2 * z * z + 2.0 * (2.0 * k2 - 1.0) * z + (1.0 - k2)
    d2z = 2.0 * m * m * f_prime
    return z, dz, d2z


def _branch_factor(res: ResolventDiagonal, p: complex) -> complex:
    """1/(2p·√(Q/p²)), 使 p 在谱下方时 G 为正"""
    ratio = res.Q(p) / (p * p)
    return 1.0 / (2.0 * p * np.emath.sqrt(ratio))


def resolvent_value(res: ResolventDiagonal, p: float, x: ArrayLike):
    """G(p, x) = P(p, z(x)) / (2√Q(p))"""
    if p == 0:
        raise SingularityError(p, 0.0)
    z, _, _ = _z_substitution(res, x)
    value = _branch_factor(res, p) * res.P(p, z)
    return _real_if_possible(value, x)


def resolvent_derivatives(res: ResolventDiagonal, p: float, x: ArrayLike):
    """(G, G′, G″) 沿 x, 由 z 代换的链式法则解析求得"""
    if p == 0:
        raise SingularityError(p, 0.0)
    z, dz, d2z = _z_substitution(res, x)
    factor = _branch_factor(res, p)
    slope = res.z_coefficient
    values = (factor * res.P(p, z), factor * slope * dz, factor * slope * d2z)
    return tuple(_real_if_possible(v, x) for v in values)


def _real_if_possible(value, template):
    value = np.asarray(value)
    if np.iscomplexobj(value) and np.all(value.imag == 0):
        value = value.real
    return value.item() if np.ndim(template) == 0 else value


def ode_residual(G, dG, d2G, U, p):
    """2GG″ − G′² − 4(U − p)G² + 1"""
    return 2.0 * G * d2G - dG * dG - 4.0 * (U - p) * G * G + 1.0


def hermit_residual(res: ResolventDiagonal, p: float, x: ArrayLike) -> ArrayLike:
    """
    将 G = P/(2√Q) 代入 Hermit 型方程后的残差

    因 G² 的系数为 1/(4Q), 残差写作 (2PP″ − P′² − 4(U−p)P²)/(4Q) + 1, 在谱隙内外均为实数

    Args:
        res: 预解式多项式
        p: 谱参数, 与 Q 的根距离需大于 1e-6·m²
        x: 坐标

    Returns:
        残差
    """
    radius = EXCLUSION_RADIUS * res.m ** 2
    for root in res.Q_roots:
        if abs(p - root) <= radius:
            raise SingularityError(p, root)

    z, dz, d2z = _z_substitution(res, x)
    P = res.P(p, z)
    slope = res.z_coefficient
    U = res.m ** 2 * (2.0 * res.k ** 2 - 1.0) + 2.0 * slope * z
    numerator = 2.0 * P * slope * d2z - (slope * dz) ** 2 - 4.0 * (U - p) * P * P
    values = numerator / (4.0 * res.Q(p)) + 1.0
    return float(values) if np.ndim(x) == 0 else values


def vacuum_resolvent(p: float, m: float) -> float:
    """常数势 U = m² 的对角预解式 1/(2√(m²−p))"""
    return 1.0 / (2.0 * math.sqrt(m * m - p))


def kink_resolvent(p: float, x: ArrayLike, m: float) -> ArrayLike:
    """k=1 闭式: 1/(2√(m²−p)) − m²sech²(mx)/(2p√(m²−p))"""
    root = math.sqrt(m * m - p)
    sech2 = 1.0 / np.cosh(np.clip(m * np.asarray(x, dtype=float), -700.0, 700.0)) ** 2
    values = 1.0 / (2.0 * root) - m * m * sech2 / (2.0 * p * root)
    return float(values) if np.ndim(x) == 0 else values


def subtracted_trace_laplace(p: float, m: float) -> float:
    """γ̂₁(p) = ∫(G_kink − G_vac)dx = −m/(p√(m²−p)), p < 0"""
    if not p < 0:
        raise DomainError(f"谱参数必须为负数, 实际为 {p!r}")
    return -m / (p * math.sqrt(m * m - p))


def subtracted_trace_quadrature(p: float, m: float, span: float = 40.0) -> float:
    """对 G_kink − G_vac 做数值积分, 与 subtracted_trace_laplace 对照"""
    value, _ = quad(lambda x: kink_resolvent(p, x, m) - vacuum_resolvent(p, m),
                    -span / m, span / m, points=[0.0], epsabs=1e-13, epsrel=1e-12, limit=200)
    return value


def symbolic_hermit_identity() -> sympy.Expr:
    """
    对符号 k, m, p, z 展开 (2PP″ − P′² − 4(U−p)P²) + 4Q

    Returns:
        化简后的表达式, 恒为 0
    """
    p, z, k, m = sympy.symbols('p z k m')
    P = p - m ** 2 * k ** 2 * z
    Q = -p * (p - m ** 2 * k ** 2) * (p - m ** 2 * (k ** 2 - 1))
    f = -k ** 2 * z ** 3 + (2 * k ** 2 - 1) * z ** 2 + (1 - k ** 2) * z
    dz_squared = 4 * m ** 2 * f
    d2z = 2 * m ** 2 * sympy.diff(f, z)
    P_z = sympy.diff(P, z)
    U = m ** 2 * (2 * k ** 2 - 1 - 2 * k ** 2 * z)
    numerator = 2 * P * P_z * d2z - P_z ** 2 * dz_squared - 4 * (U - p) * P ** 2
    return sympy.simplify(sympy.expand(numerator + 4 * Q))
