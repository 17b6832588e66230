"""Command line interface.

    coljones compute --strands 2 --braid "1 1 1" --color 2 --route all
    coljones verify routes --seed 7 --max-strands 3 --max-len 6 --max-color 3
    coljones tables lawrence --n 3 --m 2 --color 2 --gen 1

Exit codes: 0 success, 1 invalid input or failed verification, 2 the
closure is not a knot, 3 routes disagree, 4 the dimension budget was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .braid import parse
from .errors import BudgetExceeded, ColJonesError, NotAKnot
from .homological import budget_cap, check_budget, class_F0, class_G, pairing_polynomial
from .hwspace import dimension, enumerate_partitions, lawrence_matrix
from .suites import ROUTES, SUITES, compute

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NOT_A_KNOT = 2
EXIT_DISAGREE = 3
EXIT_BUDGET = 4

SCHEMA = 1


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def cmd_compute(args: argparse.Namespace) -> int:
    if args.color < 2:
        print("error: --color must be at least 2", file=sys.stderr)
        return EXIT_INVALID
    b = parse(args.braid, args.strands)
    routes = list(ROUTES) if args.route == "all" else [args.route]
    values = {}
    for r in routes:
        values[r] = compute(b, args.color, r, args.budget)
    rendered = {r: str(v) for r, v in values.items()}
    agree = len(set(rendered.values())) == 1
    result = values[routes[0]]
    if args.output == "json":
        payload = {
            "schema": SCHEMA,
            "strands": b.strands,
            "braid": list(b.letters),
            "color": args.color,
            "route": args.route,
            "agree": agree,
            "jones": str(result),
            "terms": result.to_json(),
        }
        if args.route == "all":
            payload["routes"] = rendered
        print(_dump(payload))
    else:
        if agree:
            print(result)
        else:
            for r, s in rendered.items():
                print(f"{r}: {s}")
    if not agree:
        print("error: routes disagree", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    suite = SUITES[args.suite]
    kwargs = {
        "seed": args.seed,
        "max_strands": args.max_strands,
        "max_len": args.max_len,
        "max_color": args.max_color,
        "budget": args.budget,
    }
    if args.count is not None:
        kwargs["count"] = args.count
    kwargs = {k: v for k, v in kwargs.items() if v is not None}
    report = suite(**kwargs)
    for line in report.lines():
        print(line)
    return EXIT_OK if report.ok else EXIT_INVALID


def _key(e) -> str:
    return "(" + ",".join(map(str, e)) + ")"


def cmd_tables(args: argparse.Namespace) -> int:
    what = args.what
    if what == "pairing":
        n, m = args.n, args.m
        if dimension(n, m) > budget_cap(args.budget):
            raise BudgetExceeded(dimension(n, m), budget_cap(args.budget))
        parts = enumerate_partitions(n, m)
        payload = {
            "schema": SCHEMA,
            "table": "pairing",
            "n": n,
            "m": m,
            "partitions": [list(e) for e in parts],
            "diagonal": {_key(e): str(pairing_polynomial(e)) for e in parts},
        }
    elif what == "lawrence":
        n, m, N = args.n, args.m, args.color
        if dimension(n, m) > budget_cap(args.budget):
            raise BudgetExceeded(dimension(n, m), budget_cap(args.budget))
        mat = lawrence_matrix(args.gen, n, m, N, generic=args.generic)
        payload = {
            "schema": SCHEMA,
            "table": "lawrence",
            "n": n,
            "m": m,
            "color": N,
            "generator": args.gen,
            "generic": args.generic,
            "partitions": [list(e) for e in mat.partitions],
            "matrix": mat.to_json(),
        }
    else:
        n, N = args.n, args.color
        check_budget(n, N, args.budget)
        payload = {
            "schema": SCHEMA,
            "table": "classes",
            "n": n,
            "color": N,
            "F": class_F0(n, N).to_json(),
            "G": class_G(n, N).to_json(),
        }
    print(_dump(payload))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coljones", description="Coloured Jones polynomials of braid closures.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="evaluate J_N of a braid closure")
    c.add_argument("--strands", type=int, required=True)
    c.add_argument("--braid", default="", help='signed generator indices, e.g. "1 -2 1 -2"')
    c.add_argument("--color", type=int, required=True)
    c.add_argument("--route", choices=[*ROUTES, "all"], default="rt")
    c.add_argument("--output", choices=["text", "json"], default="text")
    c.add_argument("--budget", type=int, default=None)
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run a seeded property suite")
    v.add_argument("suite", choices=list(SUITES))
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--max-strands", type=int, default=None)
    v.add_argument("--max-len", type=int, default=None)
    v.add_argument("--max-color", type=int, default=None)
    v.add_argument("--count", type=int, default=None)
    v.add_argument("--budget", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("tables", help="dump representation data as JSON")
    t.add_argument("what", choices=["lawrence", "pairing", "classes"])
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--m", type=int, default=0)
    t.add_argument("--color", type=int, default=2)
    t.add_argument("--gen", type=int, default=1)
    t.add_argument("--generic", action="store_true", help="keep s as a variable")
    t.add_argument("--budget", type=int, default=None)
    t.set_defaults(func=cmd_tables)
    return p


def _join_braid(argv: Sequence[str]) -> list[str]:
    # "--braid -1 2" would otherwise be read as an option
    out: list[str] = []
    it = iter(argv)
    for a in it:
        if a == "--braid":
            out.append("--braid=" + next(it, ""))
        else:
            out.append(a)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_join_braid(argv))
    try:
        return args.func(args)
    except NotAKnot as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_A_KNOT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ColJonesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
