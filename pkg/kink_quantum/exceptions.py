"""
异常定义
Exception Hierarchy
"""

from typing import Optional


class KinkQuantumError(Exception):
    """所有计算错误的基类"""


class MaterialParseError(KinkQuantumError, ValueError):
    """材料文件格式错误"""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"第{line_number}行: {message}")
        self.line_number = line_number


class MaterialValidationError(KinkQuantumError, ValueError):
    """材料常数校验失败"""

    def __init__(self, field: str, value: object, reason: str = "必须为正数"):
        super().__init__(f"字段 {field} 无效 ({value!r}): {reason}")
        self.field = field
        self.value = value


class UnknownMaterialError(KinkQuantumError, KeyError):
    """数据库中没有该材料"""

    def __init__(self, name: str):
        super().__init__(f"未知材料: {name}")
        self.name = name

    def __str__(self) -> str:
        return str(self.args[0])


class DomainError(KinkQuantumError, ValueError):
    """参数超出运算定义域"""


class SingularityError(KinkQuantumError, ArithmeticError):
    """谱参数过于接近Q(p)的根"""

    def __init__(self, p: float, root: float):
        super().__init__(f"p={p!r} 距离 Q 的根 {root!r} 过近")
        self.p = p
        self.root = root


class ConvergenceError(KinkQuantumError, RuntimeError):
    """迭代未收敛"""

    def __init__(self, iterations: int, residual: float, message: Optional[str] = None):
        text = message or f"{iterations} 次迭代后未收敛, 残差 {residual:.3e}"
        super().__init__(text)
        self.iterations = iterations
        self.residual = residual


class OverlapError(KinkQuantumError, ValueError):
    """两条原子链发生重叠"""

    def __init__(self, distance: float, limit: float):
        super().__init__(f"原子间距 {distance:.3e} m 小于下限 {limit:.3e} m")
        self.distance = distance
        self.limit = limit


class DegenerateFitError(KinkQuantumError, ValueError):
    """G2 拟合退化"""


class NumericalInstabilityError(KinkQuantumError, ArithmeticError):
    """数值递推溢出"""
