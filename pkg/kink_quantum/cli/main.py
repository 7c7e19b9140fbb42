"""
命令行入口
Command-Line Entry Point
"""

import argparse
import logging
import sys
from typing import List, Optional, Tuple

from ..config.settings import Settings
from ..database.material_repository import MaterialRepository
from ..exceptions import KinkQuantumError
from ..models.dislocation import MassConvention
from ..models.material import ModelMode
from . import commands
from .output import OutputFormatter

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
# 取 'a,b' 形式参数的选项
PAIR_OPTIONS = ('--range', '--grid')


def _float_pair(text: str) -> Tuple[float, float]:
    """解析 'a,b' 形式的两个数"""
    parts = text.split(',')
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"应为两个以逗号分隔的数, 实际为 {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"无法解析数值: {text!r}") from None


def _x_range(text: str) -> Tuple[float, float]:
    low, high = _float_pair(text)
    if not low < high:
        raise argparse.ArgumentTypeError(f"区间下限必须小于上限: {text!r}")
    return low, high


def _attach_pair_values(argv: List[str]) -> List[str]:
    """'--range -1,1' 改写为 '--range=-1,1', 否则以 '-' 开头的区间会被当作选项"""
    tokens: List[str] = []
    pending = False
    for token in argv:
        if pending:
            tokens[-1] = f"{tokens[-1]}={token}"
            pending = False
            continue
        tokens.append(token)
        pending = token in PAIR_OPTIONS
    return tokens


def _grid(text: str) -> Tuple[float, float]:
    half_width, step = _float_pair(text)
    if not (step > 0 and half_width > step):
        raise argparse.ArgumentTypeError(f"网格参数无效: {text!r}")
    return half_width, step


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"不是数值: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"必须为正数: {text!r}")
    return value


def _mode_argument(parser: argparse.ArgumentParser, default: ModelMode) -> None:
    parser.add_argument('--mode', default=default.value,
                        choices=[mode.value for mode in ModelMode], help='ε 约定')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='kink_quantum',
        description='Sine-Gordon kink energies and one-loop quantum corrections from crystal data',
    )
    parser.add_argument('--db', help='材料数据文件 (默认使用内置数据)')
    parser.add_argument('--format', dest='output_format', choices=['csv', 'json'],
                        help='输出格式')
    parser.add_argument('--strict', action='store_true', help='遇到第一个错误即停止')
    parser.add_argument('--full-precision', action='store_true', help='不按有效数字取整')
    parser.add_argument('-v', '--verbose', action='store_true', help='输出 INFO 级日志')
    sub = parser.add_subparsers(dest='command', required=True)

    sub.add_parser('materials', help='列出材料常数')

    table = sub.add_parser('table', help='生成全部材料的能量表')
    table.add_argument('--workers', type=int, help='并行进程数')
    table.add_argument('--mass-convention', choices=[c.value for c in MassConvention])

    correction = sub.add_parser('correction', help='单一材料的量子修正')
    correction.add_argument('material')
    _mode_argument(correction, ModelMode.CROWDION)
    correction.add_argument('--T', dest='T', type=_positive_float, help='时间尺度 T, 秒')
    correction.add_argument('--untie-r', type=_positive_float,
                            help='r 相对 √(εT/ħ) 的倍数')

    dislocation = sub.add_parser('dislocation', help='位错扭结第二层参数与能量')
    dislocation.add_argument('material')
    dislocation.add_argument('--mass-convention', choices=[c.value for c in MassConvention])

    barrier = sub.add_parser('pn-barrier', help='Peierls-Nabarro 势垒')
    barrier.add_argument('material')
    _mode_argument(barrier, ModelMode.DISLOCATION)

    profile = sub.add_parser('profile', help='静态解与涨落势采样')
    profile.add_argument('material')
    _mode_argument(profile, ModelMode.CROWDION)
    profile.add_argument('--k', type=float, default=1.0, help='椭圆模数')
    profile.add_argument('--range', dest='x_range', type=_x_range, default=(-10.0, 10.0),
                         help="x′ 区间 'a,b'")
    profile.add_argument('--samples', type=int, default=201)

    relax_dump = sub.add_parser('relax-dump', help='弛豫后扭结的逐原子位移')
    relax_dump.add_argument('material')
    _mode_argument(relax_dump, ModelMode.DISLOCATION)
    relax_dump.add_argument('--center', choices=['site', 'bond'], default='site')

    spectrum = sub.add_parser('spectrum-check', help='有限差分热迹校验')
    spectrum.add_argument('--m', type=_positive_float, default=1.0)
    spectrum.add_argument('--grid', type=_grid, help="'L,h'")
    return parser


def _apply_overrides(settings: Settings, args: argparse.Namespace) -> None:
    if args.db:
        settings.database.db_path = args.db
    if args.output_format:
        settings.output.output_format = args.output_format
    if args.full_precision:
        settings.output.full_precision = True
    if args.verbose:
        settings.output.log_level = 'INFO'
    if getattr(args, 'workers', None):
        settings.output.workers = args.workers
    if getattr(args, 'mass_convention', None):
        settings.dislocation.mass_convention = args.mass_convention


def run(args: argparse.Namespace, settings: Settings) -> int:
    formatter = OutputFormatter(settings.output)
    repository = MaterialRepository(settings.database.db_path)

    if args.command == 'materials':
        print(commands.cmd_materials(repository, formatter), end='')
        return EXIT_OK
    if args.command == 'table':
        text, errors = commands.cmd_table(repository, settings, formatter, strict=args.strict)
        print(text, end='')
        for error in errors:
            print(f"错误: {error}", file=sys.stderr)
        return EXIT_ERROR if errors else EXIT_OK
    if args.command == 'spectrum-check':
        half_width, step = args.grid or (settings.oracle.half_width, settings.oracle.grid_step)
        print(commands.cmd_spectrum_check(args.m, half_width, step, settings.oracle.t_values,
                                          formatter), end='')
        return EXIT_OK

    material = repository.get_by_name(args.material)
    mode = ModelMode.parse(getattr(args, 'mode', ModelMode.DISLOCATION))
    if args.command == 'correction':
        text = commands.cmd_correction(material, mode, settings, formatter, args.T, args.untie_r)
    elif args.command == 'dislocation':
        text = commands.cmd_dislocation(material, settings, formatter)
    elif args.command == 'pn-barrier':
        text = commands.cmd_pn_barrier(material, mode, settings, formatter)
    elif args.command == 'profile':
        text = commands.cmd_profile(material, mode, args.k, args.x_range, args.samples, formatter)
    else:
        text = commands.cmd_relax_dump(material, mode, args.center, settings, formatter)
    print(text if text.endswith('\n') else text + '\n', end='')
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """解析参数并执行子命令, 返回退出码"""
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(_attach_pair_values(argv))

    try:
        settings = Settings.from_env()
    except ValueError as exc:
        logger.debug("环境变量解析失败", exc_info=True)
        print(f"配置错误: {exc}", file=sys.stderr)
        return EXIT_ERROR
    _apply_overrides(settings, args)

    logging.basicConfig(level=getattr(logging, settings.output.log_level, logging.WARNING),
                        format='%(levelname)s %(name)s: %(message)s')

    errors = settings.validate()
    if errors:
        for error in errors:
            print(f"配置错误: {error}", file=sys.stderr)
        return EXIT_ERROR

    try:
        return run(args, settings)
    except (KinkQuantumError, ValueError) as exc:
        print(f"错误: {exc}", file=sys.stderr)
        return EXIT_ERROR
