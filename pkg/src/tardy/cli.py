"""``tardy`` command line: solve, gen, crosscheck, bench."""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .errors import TardyError
from .generate import DEFAULT_P_RANGE, DEFAULT_W_RANGE, generate_instance
from .harness import bench, crosscheck
from .io import dumps_instance, load_instance, parse_instance, result_record
from .mip import ENGINES
from .solvers import ALGORITHMS, solve


def _range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(part) for part in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _sizes(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated sizes, got {text!r}") from None


def _emit(text: str, output: str | None) -> None:
    sys.stdout.write(text)
    if output:
        Path(output).write_text(text)


def cmd_solve(args) -> int:
    instance = parse_instance(sys.stdin.read()) if args.input == "-" else load_instance(args.input)
    start = time.perf_counter()
    solution = solve(instance, args.algo, args.engine)
    wall_ms = (time.perf_counter() - start) * 1000
    _emit(json.dumps(result_record(solution, wall_ms)) + "\n", args.output)
    return 0


def cmd_gen(args) -> int:
    instance = generate_instance(
        args.n, args.nu_d, args.nu_p, args.nu_w, seed=args.seed,
        p_range=args.p_range, d_range=args.d_range, w_range=args.w_range, name=args.name,
    )
    _emit(dumps_instance(instance), args.output)
    return 0


def cmd_crosscheck(args) -> int:
    report = crosscheck(args.count, args.n, (args.nu_d, args.nu_p, args.nu_w), args.seed)
    _emit(report.text, args.output)
    return 0 if report.passed else 1


def cmd_bench(args) -> int:
    report = bench(
        args.algo, args.sizes, args.nu_d, args.nu_p, args.nu_w,
        seed=args.seed, repeat=args.repeat, engine=args.engine,
    )
    _emit(json.dumps(report.as_dict(), indent=2) + "\n", args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tardy", description="Exact solvers for minimising the weighted number of tardy jobs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one instance file")
    p.add_argument("--input", required=True, help="instance JSON file, or - for stdin")
    p.add_argument("--algo", required=True, choices=sorted(ALGORITHMS))
    p.add_argument("--engine", default="mip", choices=ENGINES, help="engine for fpt-* algorithms")
    p.add_argument("--output", help="also write the result record here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nu-d", type=int, required=True)
    p.add_argument("--nu-p", type=int, required=True)
    p.add_argument("--nu-w", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p-range", type=_range, default=DEFAULT_P_RANGE, metavar="LO:HI")
    p.add_argument("--d-range", type=_range, default=None, metavar="LO:HI",
                   help="default 1:max(4n, nu_d)")
    p.add_argument("--w-range", type=_range, default=DEFAULT_W_RANGE, metavar="LO:HI")
    p.add_argument("--name")
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("crosscheck", help="compare every solver with the oracle")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n", type=int, default=10, help="largest instance size")
    p.add_argument("--nu-d", type=int, default=3, help="cap on distinct due dates")
    p.add_argument("--nu-p", type=int, default=3, help="cap on distinct processing times")
    p.add_argument("--nu-w", type=int, default=3, help="cap on distinct weights")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("bench", help="time one solver over growing n")
    p.add_argument("--algo", required=True, choices=sorted(ALGORITHMS))
    p.add_argument("--n", dest="sizes", type=_sizes, default=[50, 100, 200, 400],
                   help="comma-separated sizes")
    p.add_argument("--nu-d", type=int)
    p.add_argument("--nu-p", type=int)
    p.add_argument("--nu-w", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--engine", default="mip", choices=ENGINES)
    p.add_argument("--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TardyError, ValueError, OSError) as exc:
        print(f"tardy {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
