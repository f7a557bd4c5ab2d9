"""Command-line front end.

Exit codes: 0 success / equal / all checks pass, 1 not equal / failures,
2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys

from . import core, jsonio
from .core import BraceError
from .expr import format_canonical, parse_element
from .hom import check_hom, identity_hom, permutation_hom, reduction_hom
from .modular import reduce_mod
from .verify import SUITES, SampleConfig, check_exhaustive, run_suites


class UsageError(Exception):
    pass


def _positive_rank(text: str) -> int:
    try:
        r = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid rank {text!r}")
    if r < 1:
        raise argparse.ArgumentTypeError(f"rank must be >= 1, got {r}")
    return r


def _add_sampling(p: argparse.ArgumentParser) -> None:
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--bound", type=int, default=10, help="coordinates drawn from [-bound, bound]")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="freebrace", description="Arithmetic in the free brace with D^3 = 0")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression and print its canonical form")
    p.add_argument("-r", type=_positive_rank, required=True)
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("eq", help="decide whether two expressions are equal")
    p.add_argument("-r", type=_positive_rank, required=True)
    p.add_argument("expr1")
    p.add_argument("expr2")

    p = sub.add_parser("axioms", help="run verification suites and print JSON reports")
    p.add_argument("-r", type=_positive_rank, required=True)
    _add_sampling(p)
    p.add_argument("--suite", default="all", help=f"one of: all, exhaustive, {', '.join(SUITES)}")

    p = sub.add_parser("dim", help="rank of the additive group of D")
    p.add_argument("-r", type=_positive_rank, required=True)

    p = sub.add_parser("quotient", help="evaluate in D and reduce modulo an odd m")
    p.add_argument("-r", type=_positive_rank, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("expr")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("homcheck", help="check the homomorphism laws for a choice of generator images")
    p.add_argument("-r", type=_positive_rank, required=True)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("-m", type=int, help="reduction modulo an odd m")
    which.add_argument("--identity", action="store_true")
    which.add_argument("--permute", metavar="PERM", help="comma-separated images, e.g. 2,1")
    _add_sampling(p)
    return parser


def _cmd_eval(args) -> int:
    x = parse_element(args.expr, args.r)
    print(jsonio.dumps(x) if args.json else format_canonical(x))
    return 0


def _cmd_eq(args) -> int:
    x, y = parse_element(args.expr1, args.r), parse_element(args.expr2, args.r)
    if x == y:
        print("equal")
        return 0
    print("not equal")
    print(f"difference: {format_canonical(core.sub(x, y))}", file=sys.stderr)
    return 1


def _config(args) -> SampleConfig:
    try:
        return SampleConfig(rank=args.r, trials=args.trials, coeff_bound=args.bound, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc))


def _cmd_axioms(args) -> int:
    cfg = _config(args)
    if args.suite == "exhaustive":
        if args.r != 1:
            raise UsageError("the exhaustive suite is defined for -r 1 only")
        reports = [check_exhaustive()]
    elif args.suite == "all":
        reports = run_suites(cfg)
    elif args.suite in SUITES:
        reports = run_suites(cfg, [args.suite])
    else:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, exhaustive, {', '.join(SUITES)}")
    for rep in reports:
        print(rep.to_json())
        print(rep.summary(), file=sys.stderr)
    return 0 if all(rep.passed for rep in reports) else 1


def _cmd_dim(args) -> int:
    print(core.dimension(args.r))
    return 0


def _cmd_quotient(args) -> int:
    x = parse_element(args.expr, args.r)
    y = reduce_mod(x, args.m)
    print(jsonio.dumps(y) if args.json else str(y))
    return 0


def _parse_perm(text: str, r: int) -> list[int]:
    try:
        perm = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"invalid permutation {text!r}")
    if len(perm) != r:
        raise UsageError(f"permutation needs {r} entries, got {len(perm)}")
    return perm


def _cmd_homcheck(args) -> int:
    cfg = _config(args)
    if args.identity:
        phi = identity_hom(args.r)
    elif args.permute is not None:
        phi = permutation_hom(_parse_perm(args.permute, args.r))
    else:
        phi = reduction_hom(args.r, args.m)
    rep = check_hom(phi, cfg)
    print(rep.to_json())
    print(rep.summary(), file=sys.stderr)
    return 0 if rep.passed else 1


COMMANDS = {
    "eval": _cmd_eval,
    "eq": _cmd_eq,
    "axioms": _cmd_axioms,
    "dim": _cmd_dim,
    "quotient": _cmd_quotient,
    "homcheck": _cmd_homcheck,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, BraceError) as exc:
        print(f"freebrace {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
