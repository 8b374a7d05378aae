"""
bartiler 命令列介面

子命令：
  count   2k×n 鋪法數（或加權多項式）
  gf      F_k 的分子、分母與級數
  oracle  以 DP 窮舉 m×n 的 k×1 鋪法
  verify  執行驗證套件
  bfile   輸出 OEIS b-file 格式

結束碼：0 成功、1 驗證失敗、2 用法或容量錯誤。
"""
import argparse
import json
import logging
import sys
from typing import List, Optional, TextIO

from . import __version__
from .config_helper import BarTilerConfig, VERIFY_LEVELS
from .errors import BarTilerError, CapacityExceeded
from .gf_engine import F_main, big_count
from .oeis_bfiles import bfile_lines
from .poly_core import coeff_at
from .tiling_oracle import count_tilings, enumerate_tilings
from .verify_suites import SUITE_NAMES, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _emit_json(payload, out: TextIO) -> None:
    out.write(json.dumps(payload, ensure_ascii=False, sort_keys=True) + '\n')


def cmd_count(args, config: BarTilerConfig, out: TextIO) -> int:
    if args.weighted:
        count = F_main(args.k).series(args.n).coeff(args.n)
        if args.format == 'json':
            _emit_json({"k": args.k, "n": args.n, "count": count.to_json()}, out)
        else:
            out.write(f"{count}\n")
        return EXIT_OK
    if args.a == 1 and args.b == 1:
        value = big_count(args.k, args.n)
    else:
        value = coeff_at(F_main(args.k), args.n, args.a, args.b)
    if args.format == 'json':
        _emit_json({"k": args.k, "n": args.n, "a": args.a, "b": args.b, "count": str(value)}, out)
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def cmd_gf(args, config: BarTilerConfig, out: TextIO) -> int:
    gf = F_main(args.k)
    series = gf.series(args.terms) if args.terms is not None else None
    if args.format == 'json':
        payload = {"k": args.k, **gf.to_json()}
        if series is not None:
            payload["series"] = series.to_json()
        _emit_json(payload, out)
        return EXIT_OK
    out.write(f"num: {gf.num}\n")
    out.write(f"den: {gf.den}\n")
    if series is not None:
        for n, coefficient in enumerate(series.coeffs):
            out.write(f"x^{n}: {coefficient}\n")
    return EXIT_OK


def cmd_oracle(args, config: BarTilerConfig, out: TextIO) -> int:
    capacity = config.resolve_capacity(args.capacity)
    threads = args.threads or config.threads
    if args.list:
        for tiling in enumerate_tilings(args.m, args.n, args.bar, cap=config.tiling_cap):
            _emit_json(tiling.to_json(), out)
    count = count_tilings(args.m, args.n, args.bar, threads=threads, capacity=capacity)
    total = count.evaluate(1, 1)
    if args.format == 'json':
        _emit_json({"m": args.m, "n": args.n, "k": args.bar, "count": count.to_json(), "total": str(total)}, out)
    else:
        out.write(f"t({args.m},{args.n};{args.bar}) = {count}\n")
        out.write(f"total: {total}\n")
    return EXIT_OK


def cmd_verify(args, config: BarTilerConfig, out: TextIO) -> int:
    level = args.level or config.level
    seed = args.seed if args.seed is not None else config.seed
    passed = run_suite(
        args.suite, level=level, seed=seed, stream=out, trials=config.trials,
        capacity=config.resolve_capacity(args.capacity), threads=args.threads or config.threads,
    )
    return EXIT_OK if passed else EXIT_FAILED


def cmd_bfile(args, config: BarTilerConfig, out: TextIO) -> int:
    for line in bfile_lines(args.k, args.max):
        out.write(line + '\n')
    return EXIT_OK


def _k_at_least_two(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"k 必須 ≥ 2: {value}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"必須為非負整數: {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"必須為正整數: {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', default='config.ini', help='設定檔路徑（預設 config.ini）')
    common.add_argument('--format', choices=('text', 'json'), default='text', help='輸出格式')
    common.add_argument('--capacity', type=_positive, default=None, help='DP 狀態數上限（覆寫設定檔與環境變數）')
    common.add_argument('--threads', type=_positive, default=None, help='DP 使用的執行緒數')
    common.add_argument('-v', '--verbose', action='store_true', help='輸出除錯日誌到 stderr')

    parser = argparse.ArgumentParser(
        prog='bartiler',
        description='2k×n 矩形 k×1 長條磚鋪法的精確計數與驗證工具',
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('count', parents=[common], help='2k×n 鋪法數')
    p.add_argument('--k', type=_k_at_least_two, required=True)
    p.add_argument('--n', type=_nonnegative, required=True)
    p.add_argument('--a', type=int, default=1)
    p.add_argument('--b', type=int, default=1)
    p.add_argument('--weighted', action='store_true', help='輸出 a、b 的加權多項式')
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser('gf', parents=[common], help='F_k 的有理形式')
    p.add_argument('--k', type=_k_at_least_two, required=True)
    p.add_argument('--terms', type=_nonnegative, default=None, help='同時輸出到 x^T 的級數')
    p.set_defaults(handler=cmd_gf)

    p = sub.add_parser('oracle', parents=[common], help='以 DP 窮舉 m×n 鋪法')
    p.add_argument('--m', type=_nonnegative, required=True)
    p.add_argument('--n', type=_nonnegative, required=True)
    p.add_argument('--bar', type=_positive, required=True, help='磚長 k')
    p.add_argument('--list', action='store_true', help='逐行輸出每個鋪法的 JSON')
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser('verify', parents=[common], help='執行驗證套件')
    p.add_argument('--suite', choices=('all',) + SUITE_NAMES, default='all')
    p.add_argument('--level', choices=VERIFY_LEVELS, default=None)
    p.add_argument('--seed', type=int, default=None)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser('bfile', parents=[common], help='輸出 OEIS b-file')
    p.add_argument('--k', type=_k_at_least_two, required=True)
    p.add_argument('--max', type=_nonnegative, required=True)
    p.set_defaults(handler=cmd_bfile)
    return parser


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """命令列進入點；用法錯誤時 argparse 以結束碼 2 離開"""
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    try:
        config = BarTilerConfig(args.config)
        level = logging.DEBUG if args.verbose else config.log_level('WARNING')
        logging.basicConfig(level=level, format='%(asctime)s - %(levelname)s - %(message)s', stream=sys.stderr)
        return args.handler(args, config, out)
    except CapacityExceeded as e:
        sys.stderr.write(f"bartiler: 超過容量上限: {e}\n")
        return EXIT_USAGE
    except BarTilerError as e:
        sys.stderr.write(f"bartiler: {e}\n")
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
