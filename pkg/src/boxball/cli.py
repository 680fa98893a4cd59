"""Command line interface: boxball <command> ..."""

from __future__ import annotations

import argparse
import json
import sys

from .bbs import (
    SteppersDisagree,
    evolve,
    format_carrier_trace,
    run_to_steady,
    soliton_decomposition,
    state_from_permutation,
)
from .core import InvalidPermutation, Permutation, Tableau, is_standard
from .greene import BudgetExceeded, greene_profile, greene_profile_oracle
from .knuth import ClassTooLarge, knuth_class_graph
from .rs import enumerate_qhat_class, rs_insert
from .verify import SUITES


def permutation_arg(text: str) -> Permutation:
    try:
        return Permutation.parse(text)
    except InvalidPermutation as exc:
        raise argparse.ArgumentTypeError(f"bad permutation {text!r}: {exc}") from None


def _compact(t: Tableau) -> list[str]:
    sep = "" if t.size <= 9 else " "
    return [sep.join(map(str, row)) for row in t.rows]


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_simulate(args) -> int:
    w = args.perm
    steps = args.steps
    if steps is None:
        steps = run_to_steady(w)[0]
    start = state_from_permutation(w)
    try:
        states = evolve(start, steps, args.stepper)
    except SteppersDisagree as exc:
        print(f"error: steppers disagree: {exc}", file=sys.stderr)
        return 1
    if args.trace_carrier:
        for t, s in enumerate(states[:-1]):
            print(f"t={t} -> t={t + 1}")
            for line in format_carrier_trace(s):
                print("  " + line)
        return 0
    if args.format == "json":
        _emit({"permutation": list(w), "states": [s.to_json() for s in states]})
    else:
        for s in states:
            print(s.render())
    return 0


def cmd_sd(args) -> int:
    w = args.perm
    t, _ = run_to_steady(w)
    sd = soliton_decomposition(w)
    if args.format == "json":
        _emit({"permutation": list(w), "sd": sd.to_json(), "shape": list(sd.shape),
               "standard": is_standard(sd), "steady_time": t})
        return 0
    for line in _compact(sd):
        print(line)
    print(f"shape: {tuple(sd.shape)}")
    print(f"standard: {str(is_standard(sd)).lower()}")
    print(f"steady time: {t}")
    return 0


def cmd_rs(args) -> int:
    pair = rs_insert(args.perm)
    if args.format == "json":
        _emit({"permutation": list(args.perm), "p": pair.p.to_json(), "q": pair.q.to_json()})
        return 0
    print("P:")
    print(pair.p)
    print("Q:")
    print(pair.q)
    return 0


def cmd_greene(args) -> int:
    w = args.perm
    prof = greene_profile_oracle(w) if args.oracle else greene_profile(w)
    if args.format == "json":
        _emit({"permutation": list(w), **prof.to_json()})
        return 0
    n = len(w)
    width = max(2, len(str(n)))
    print("k".ljust(11) + " ".join(str(k).rjust(width) for k in range(1, n + 1)))
    for name in ("incr", "decr", "local_incr", "local_decr"):
        row = getattr(prof, name)
        print(name.ljust(11) + " ".join(str(v).rjust(width) for v in row))
    return 0


def cmd_knuth_graph(args) -> int:
    try:
        g = knuth_class_graph(args.perm)
    except ClassTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(g.to_dot())
    if args.format == "dot":
        sys.stdout.write(g.to_dot())
    elif args.format == "json":
        _emit(g.to_json())
    else:
        for w in g.vertices:
            v = g.vertex(w)
            print(f"{w}  t={v.time}  shape={tuple(v.shape)}  sd={'/'.join(_compact(v.sd))}")
        for e in g.edges:
            print(f"{e.a} -- {e.b}  {e.label}")
    return 0


def cmd_qhat(args) -> int:
    try:
        members = enumerate_qhat_class(args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.count:
        print(len(members))
    else:
        for w in members:
            print(w)
    return 0


def cmd_verify(args) -> int:
    suite = SUITES[args.suite]
    try:
        report = suite(args.n, jobs=args.jobs)
    except (BudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        _emit(report.to_json())
    else:
        print(report.to_text())
    if report.passed:
        return 0
    if report.conjecture and not args.strict:
        return 0
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boxball", description="Box-ball systems on permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="evolve the box-ball system seeded by a permutation")
    p.add_argument("perm", type=permutation_arg)
    p.add_argument("--steps", type=int, help="number of moves (default: steady-state time)")
    p.add_argument("--format", choices=["ascii", "json"], default="ascii")
    p.add_argument("--stepper", choices=["direct", "carrier", "both"], default="direct")
    p.add_argument("--trace-carrier", action="store_true", help="print every carrier step")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("sd", help="soliton decomposition")
    p.add_argument("perm", type=permutation_arg)
    p.add_argument("--format", choices=["ascii", "json"], default="ascii")
    p.set_defaults(func=cmd_sd)

    p = sub.add_parser("rs", help="Robinson-Schensted tableaux")
    p.add_argument("perm", type=permutation_arg)
    p.add_argument("--format", choices=["ascii", "json"], default="ascii")
    p.set_defaults(func=cmd_rs)

    p = sub.add_parser("greene", help="classical and localized Greene statistics")
    p.add_argument("perm", type=permutation_arg)
    p.add_argument("--oracle", action="store_true", help="compute from the definitions")
    p.add_argument("--format", choices=["ascii", "json"], default="ascii")
    p.set_defaults(func=cmd_greene)

    p = sub.add_parser("knuth-graph", help="Knuth class with SD and steady-state times")
    p.add_argument("perm", type=permutation_arg)
    p.add_argument("--dot", metavar="FILE", help="also write the graph in DOT format")
    p.add_argument("--format", choices=["ascii", "json", "dot"], default="ascii")
    p.set_defaults(func=cmd_knuth_graph)

    p = sub.add_parser("qhat", help="permutations whose recording tableau is Q-hat")
    p.add_argument("--n", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--list", action="store_true", default=True)
    mode.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_qhat)

    p = sub.add_parser("verify", help="exhaustive check of a claim over S_n")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--strict", action="store_true", help="conjecture violations exit nonzero")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
