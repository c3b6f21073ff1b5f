"""
Command-line front end.

    natfromint verify [--level quick|full] [--seed N] [--json]
    natfromint classify <int>
    natfromint split <int>
    natfromint sub <int> <int>
    natfromint lt <int> <int>
    natfromint nat <add|mul|rank> <args>
    natfromint universe <unit|empty|cop ...> --scan N
    natfromint bench [--max N] [--json]

Exit status: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import bench as bench_mod
from .harness import m_elem, nat_of_oracle, numeral, reveal, reveal_sum
from .kernel import Counters, counting
from .nat_derivation import m_ind, nat_add, nat_mul, nat_to_int, rank_algebra
from .signs import classify, lt, sub
from .doubling import split
from .universe import code_coproduct, code_empty, code_identity, code_unit, is_el
from .verification import run_suite

_INT = re.compile(r"-?[0-9]+\Z")


class UsageError(Exception):
    pass


def parse_int(text: str) -> int:
    if not _INT.match(text):
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    return int(text)


def parse_nat(text: str) -> int:
    k = parse_int(text)
    if k < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {k}")
    return k


def counters_line(delta: Counters) -> str:
    return "counters: " + " ".join(f"{k}={v}" for k, v in delta.as_dict().items())


def emit(args, result, delta: Counters, text: str | None = None) -> None:
    if args.json:
        print(json.dumps({"result": result, "counters": delta.as_dict()}))
    else:
        print(text if text is not None else result)
        print(counters_line(delta))


def parse_code(tokens: list[str]):
    """Prefix expressions: ``unit``, ``empty``, ``id``, ``cop <code> <code>``."""
    def go(pos):
        if pos >= len(tokens):
            raise UsageError("incomplete universe expression")
        tok = tokens[pos]
        if tok == "unit":
            return code_unit(), pos + 1
        if tok == "empty":
            return code_empty(), pos + 1
        if tok == "id":
            return code_identity(), pos + 1
        if tok == "cop":
            f, pos = go(pos + 1)
            g, pos = go(pos)
            return code_coproduct(f, g), pos
        raise UsageError(f"unknown code {tok!r}")

    code, end = go(0)
    if end != len(tokens):
        raise UsageError(f"trailing tokens: {tokens[end:]}")
    return code


# -- commands -----------------------------------------------------------------------


def cmd_verify(args) -> int:
    seed = args.seed
    env = os.environ.get("OMEGA_SEED")
    if env is not None:
        if not _INT.match(env) or int(env) < 0:
            raise UsageError(f"OMEGA_SEED must be an unsigned integer, got {env!r}")
        seed = int(env)
    report = run_suite(args.level, seed)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        for case in report.cases:
            print(f"{case.status.upper():4}  {case.name:<24} {case.detail}")
        print(f"{report.passed} passed, {report.failed} failed in {report.wall_ms / 1000:.1f}s (seed {seed})")
        print(counters_line(report.counters))
    return 0 if report.ok else 1


def cmd_classify(args) -> int:
    n = numeral(args.n)
    with counting() as c:
        sign = classify(n)
    emit(args, str(sign), c.delta)
    return 0


def cmd_split(args) -> int:
    n = numeral(args.n)
    with counting() as c:
        s = split(n)
    tag, payload = reveal_sum(s)
    emit(args, {"tag": tag, "payload": payload}, c.delta, f"{tag} {payload}")
    return 0


def cmd_sub(args) -> int:
    x, y = numeral(args.x), numeral(args.y)
    with counting() as c:
        d = sub(x, y)
    emit(args, reveal(d), c.delta)
    return 0


def cmd_lt(args) -> int:
    x, y = numeral(args.x), numeral(args.y)
    with counting() as c:
        r = lt(x, y)
    emit(args, r, c.delta, "true" if r else "false")
    return 0


def cmd_nat(args) -> int:
    expected = {"add": 2, "mul": 2, "rank": 1}[args.op]
    if len(args.args) != expected:
        raise UsageError(f"nat {args.op} takes {expected} argument(s)")
    if args.op == "rank":
        m = m_elem(args.args[0])
        with counting() as c:
            result = m_ind(rank_algebra(), m)
    else:
        a, b = map(nat_of_oracle, args.args)
        op = nat_add if args.op == "add" else nat_mul
        with counting() as c:
            result = reveal(nat_to_int(op(a, b)))
    emit(args, result, c.delta)
    return 0


def cmd_universe(args) -> int:
    code = parse_code(args.expr)
    with counting() as c:
        members = [k for k in range(-args.scan, args.scan + 1) if is_el(code, numeral(k))]
    emit(args, members, c.delta, " ".join(map(str, members)) or "(no members)")
    return 0


def cmd_bench(args) -> int:
    if args.max > bench_mod.CEILING:
        raise UsageError(f"--max is capped at {bench_mod.CEILING}")
    rows = bench_mod.run_bench(args.max)
    if args.json:
        print(json.dumps(bench_mod.rows_as_json(rows), indent=2))
    else:
        print(bench_mod.format_table(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="natfromint", description=__doc__.split("\n\n")[0].strip())
    sub_p = parser.add_subparsers(dest="command", required=True)

    p = sub_p.add_parser("verify", help="run the verification suite")
    p.add_argument("--level", choices=["quick", "full"], default="full")
    p.add_argument("--seed", type=parse_nat, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    for name, func, argnames in [
        ("classify", cmd_classify, ["n"]),
        ("split", cmd_split, ["n"]),
        ("sub", cmd_sub, ["x", "y"]),
        ("lt", cmd_lt, ["x", "y"]),
    ]:
        p = sub_p.add_parser(name)
        for a in argnames:
            p.add_argument(a, type=parse_int)
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    p = sub_p.add_parser("nat", help="natural-number arithmetic by induction")
    p.add_argument("op", choices=["add", "mul", "rank"])
    p.add_argument("args", nargs="+", type=parse_nat)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_nat)

    p = sub_p.add_parser("universe", help="members of a code in [-N, N]")
    p.add_argument("expr", nargs="+")
    p.add_argument("--scan", type=parse_nat, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_universe)

    p = sub_p.add_parser("bench", help="step counts and timings")
    p.add_argument("--max", type=parse_nat, default=64)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
