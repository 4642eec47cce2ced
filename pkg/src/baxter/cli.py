"""Command line interface: ``baxter <subcommand> ...`` writing JSON Lines.

Exit codes: 0 success, 1 domain error (one JSON error object on stdout),
2 usage error, 3 when a verification finds a failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable, Sequence

from . import config, harness, qpoly
from .errors import BaxterError, Malformed

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_FAILED = 0, 1, 2, 3

POLYS = ("theta-q", "macmahon-q", "qbinomial", "baxter-poly", "baxter-poly-tq", "gamma", "gamma-q",
         "hoggatt-q", "q-catalan", "ffon-fixed")


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _table(records: list) -> list[str]:
    if not records:
        return []
    if not all(isinstance(r, dict) for r in records):
        return [_dumps(r) if not isinstance(r, str) else r for r in records]
    cols = list(records[0])
    cells = [[c for c in cols]] + [
        [v if isinstance(v, str) else _dumps(v) for v in (r.get(c) for c in cols)] for r in records]
    widths = [max(len(row[i]) for row in cells) for i in range(len(cols))]
    return ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]


def _emit(records: Iterable, fmt: str, out) -> None:
    if fmt == "table":
        for line in _table(list(records)):
            print(line, file=out)
    else:
        for r in records:
            print(_dumps(r), file=out)


def _parse_object(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        return text
    # bare digit strings such as 3124 are one-line permutations, not numbers
    return text if isinstance(obj, int) else obj


def _size(args) -> tuple[int, tuple[int, int] | None]:
    n, k, l = args.n, args.k, args.l
    if k is not None and l is not None:
        if n is not None and n != k + l + 1:
            raise Malformed(f"--n {n} disagrees with --k {k} --l {l}")
        return k + l + 1, (k, l)
    if n is None:
        raise Malformed("give --n, or both --k and --l")
    if k is not None:
        return n, (k, n - 1 - k)
    if l is not None:
        return n, (n - 1 - l, l)
    return n, None


def _sizes(args) -> list[int]:
    if args.max_n is not None:
        return list(range(1, args.max_n + 1))
    return [_size(args)[0]]


# --- subcommands ------------------------------------------------------------

def _cmd_enumerate(args, out) -> int:
    spec = harness.family(args.family)
    n, order = _size(args)
    objs = spec.objects(n)
    if order is not None:
        if spec.stat is None:
            raise Malformed(f"family {spec.name!r} is not graded by (k, l)")
        objs = [x for x in objs if spec.stat(x) == order]
    _emit((spec.to_json(x) for x in objs), args.format, out)
    return EXIT_OK


def _cmd_map(args, out) -> int:
    _emit([harness.map_object(args.source, args.target, _parse_object(args.object))], args.format, out)
    return EXIT_OK


def _cmd_involute(args, out) -> int:
    spec = harness.family(args.family)
    x = spec.from_json(_parse_object(args.object))
    if not spec.member(x):
        raise harness.NotMember(f"object is not a member of {spec.name}")
    _emit([spec.to_json(spec.involution(x))], args.format, out)
    return EXIT_OK


def _cmd_fixed(args, out) -> int:
    spec = harness.family(args.family)
    n, order = _size(args)
    objs = spec.objects(n)
    rows = []
    if spec.stat is None:
        rows.append({"family": spec.name, "n": n, "count": len(objs),
                     "fixed": sum(1 for x in objs if spec.involution(x) == x)})
    else:
        orders = [order] if order is not None else [(k, n - 1 - k) for k in range(n - 1, -1, -1)]
        for k, l in orders:
            part = [x for x in objs if spec.stat(x) == (k, l)]
            rows.append({"family": spec.name, "n": n, "k": k, "l": l, "count": len(part),
                         "fixed": sum(1 for x in part if spec.involution(x) == x)})
    _emit(rows, args.format, out)
    return EXIT_OK


def _need(args, *names):
    missing = [f"--{m}" for m in names if getattr(args, m) is None]
    if missing:
        raise Malformed(f"poly {args.name} needs {' '.join(missing)}")
    return [getattr(args, m) for m in names]


def _poly_value(args):
    name = args.name
    if name == "theta-q":
        return qpoly.theta_q(*_need(args, "k", "l")).to_json()
    if name == "macmahon-q":
        return qpoly.macmahon_q(*_need(args, "k", "l", "m")).to_json()
    if name == "qbinomial":
        return qpoly.qbinomial(*_need(args, "n", "k")).to_json()
    if name == "baxter-poly":
        return qpoly.baxter_poly(*_need(args, "n")).to_json()
    if name == "baxter-poly-tq":
        return [c.to_json() for c in qpoly.baxter_poly_tq(*_need(args, "n"))]
    if name == "gamma":
        return [str(g) for g in qpoly.gamma_expansion(qpoly.baxter_poly(*_need(args, "n")))]
    if name == "gamma-q":
        return qpoly.gamma_q(*_need(args, "n", "i")).to_json()
    if name == "hoggatt-q":
        return qpoly.hoggatt_sum_q(*_need(args, "n", "m")).to_json()
    if name == "q-catalan":
        return qpoly.q_catalan(*_need(args, "n")).to_json()
    return str(qpoly.ffon_fixed(*_need(args, "k", "l")))


def _cmd_poly(args, out) -> int:
    _emit([_poly_value(args)], args.format, out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    edges = [e.name for e in harness.registered_edges()] if args.edge == "all" else [harness.edge(args.edge).name]
    order = None
    if args.max_n is None:
        _, order = _size(args)
    ok = True
    for n in _sizes(args):
        reports = [harness.check_square(name, n, order, threads=args.threads) for name in edges]
        ok = ok and all(r.ok for r in reports)
        _emit([r.to_json() for r in reports], args.format, out)
    return EXIT_OK if ok else EXIT_FAILED


def _cmd_census(args, out) -> int:
    families = args.family.split(",") if args.family else harness.CENSUS_FAMILIES
    ok = True
    for n in _sizes(args):
        rows = [dict({"n": n}, **row) for row in harness.census(n, families)]
        ok = ok and all(r["consistent"] for r in rows)
        _emit(rows, args.format, out)
    return EXIT_OK if ok else EXIT_FAILED


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--config", help="JSON file of size limits")
    common.add_argument("--threads", type=int, default=harness.default_threads())

    sizes = argparse.ArgumentParser(add_help=False)
    for flag in ("--n", "--k", "--l"):
        sizes.add_argument(flag, type=int)

    parser = argparse.ArgumentParser(prog="baxter", description="Baxter families, bijections and q-polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common, sizes], help="list a family at size n or order (k, l)")
    p.add_argument("--family", required=True)
    p.set_defaults(run=_cmd_enumerate)

    p = sub.add_parser("map", parents=[common], help="carry an object along the bijections")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("object", help="JSON object of the source family (digit strings are permutations)")
    p.set_defaults(run=_cmd_map)

    p = sub.add_parser("involute", parents=[common], help="apply a family's involution")
    p.add_argument("--family", required=True)
    p.add_argument("object")
    p.set_defaults(run=_cmd_involute)

    p = sub.add_parser("fixed", parents=[common, sizes], help="count involution-fixed objects")
    p.add_argument("--family", required=True)
    p.set_defaults(run=_cmd_fixed)

    p = sub.add_parser("poly", parents=[common, sizes], help="print a polynomial as decimal-string coefficients")
    p.add_argument("name", choices=POLYS)
    p.add_argument("--m", type=int)
    p.add_argument("--i", type=int)
    p.set_defaults(run=_cmd_poly)

    p = sub.add_parser("verify", parents=[common, sizes], help="check commuting squares")
    p.add_argument("--edge", default="all")
    p.add_argument("--max-n", type=int)
    p.set_defaults(run=_cmd_verify)

    p = sub.add_parser("census", parents=[common, sizes], help="counts and fixed points per (k, l)")
    p.add_argument("--family", help="comma-separated families (default: the six table families)")
    p.add_argument("--max-n", type=int)
    p.set_defaults(run=_cmd_census)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if args.threads < 1:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        config.configure(args.config)
        return args.run(args, out)
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    except (BaxterError, ArithmeticError, OSError, json.JSONDecodeError) as e:
        print(_dumps({"error": type(e).__name__, "message": str(e)}), file=out)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
