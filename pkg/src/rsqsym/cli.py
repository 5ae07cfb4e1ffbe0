"""Command-line front end.

Exit status: 0 on success, 1 when a verified identity fails, 2 on usage or
parse errors.  Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bijections, expansions
from .compositions import Composition, Partition, format_composition, parse_composition
from .insertion import dual_row_insert, rsct_insert
from .qsym import Basis, BasisError, transition_matrix
from .tableaux import (
    Filling,
    Kind,
    enumerate_fillings,
    filling_to_json,
    format_filling,
    parse_rows,
    standard_fillings,
)

_MAP_INPUT = {
    "rho": Kind.RRS, "rho-inv": Kind.RSCT, "rho-col": Kind.RCS, "rho-col-inv": Kind.CSCT,
    "transpose": Kind.RRS, "phi": Kind.CSCT, "phi-inv": Kind.RSCT,
}
_FAMILY_LABEL = {"QS": "QS", "RS": "RS", "SCHUR": "s"}


class UsageError(Exception):
    pass


def _composition(text: str) -> Composition:
    try:
        return parse_composition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _order(text: str) -> list[Composition]:
    return [_composition(chunk) for chunk in text.split(";")]


def _rows(text: str) -> list[list[int]]:
    try:
        return parse_rows(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _kind(text: str) -> Kind:
    try:
        return Kind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _basis(text: str) -> Basis:
    try:
        return Basis.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rsqsym", description=__doc__.splitlines()[0])
    p.add_argument("--cache", metavar="PATH", help="JSON file memoising expansions across runs")
    sub = p.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")

    e = sub.add_parser("expand", parents=[fmt], help="expand QS, RS or Schur functions")
    e.add_argument("--family", choices=("qs", "rs", "schur"), required=True, type=str.lower)
    e.add_argument("--index", type=_composition, required=True, help="e.g. 1,3")
    e.add_argument("--basis", type=_basis, default=Basis.F, help="M or F")

    m = sub.add_parser("matrix", parents=[fmt], help="transition matrix between bases")
    m.add_argument("--from", dest="src", type=_basis, required=True)
    m.add_argument("--to", dest="dst", type=_basis, required=True)
    m.add_argument("-n", type=int, required=True)
    m.add_argument("--rows", dest="row_order", type=_order, help="';'-separated compositions")
    m.add_argument("--cols", dest="col_order", type=_order, help="';'-separated compositions")

    t = sub.add_parser("tableaux", parents=[fmt], help="list or count fillings")
    t.add_argument("--shape", type=_composition, required=True)
    t.add_argument("--kind", type=_kind, default=Kind.RSCT)
    t.add_argument("--max-entry", type=int, help="largest entry (default: the degree)")
    t.add_argument("--standard", action="store_true", help="only fillings by 1..n")
    t.add_argument("--count", action="store_true")

    i = sub.add_parser("insert", parents=[fmt], help="trace an insertion")
    i.add_argument("--rows", type=_rows, required=True, help="rows separated by '/', e.g. 2,1/2/4,3,2")
    i.add_argument("--value", "-x", type=int, required=True)
    i.add_argument("--kind", type=_kind, default=Kind.RSCT, help="rsct (F ⤙ x) or rrs (T <- x)")

    b = sub.add_parser("bijection", parents=[fmt], help="trace rho, phi and friends")
    b.add_argument("--map", choices=bijections.MAP_NAMES, required=True)
    b.add_argument("--rows", type=_rows, required=True)
    b.add_argument("--kind", type=_kind, help="input kind (default depends on the map)")

    v = sub.add_parser("verify", parents=[fmt], help="check identities up to a degree")
    v.add_argument("identity", choices=(*expansions.VERIFIERS, "all"))
    v.add_argument("-n", type=int, default=5, help="check every degree 1..n (default 5)")
    return p


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_expand(args) -> int:
    family = args.family.upper()
    index = args.index
    if family == "SCHUR":
        try:
            index = Partition(index)
        except ValueError as exc:
            raise UsageError(f"argument --index: {exc}") from None
    if args.basis not in (Basis.M, Basis.F):
        raise UsageError("argument --basis: expansions target M or F")
    report = expansions.expand(family, index, args.basis)
    if args.format == "json":
        _emit(report.to_json())
    else:
        print(f"{_FAMILY_LABEL[family]}({format_composition(index)}) = {report.element}")
    return 0


def cmd_matrix(args) -> int:
    if args.n < 0:
        raise UsageError("argument -n: must be nonnegative")
    try:
        tm = transition_matrix(args.src, args.dst, args.n, args.row_order, args.col_order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "csv":
        sys.stdout.write(tm.to_csv())
    elif args.format == "json":
        _emit(tm.to_json())
    else:
        print(tm.pretty())
    return 0


def cmd_tableaux(args) -> int:
    shape = tuple(args.shape)
    if args.standard:
        found = standard_fillings(shape, args.kind)
    else:
        top = args.max_entry if args.max_entry is not None else max(sum(shape), 1)
        if top < 1:
            raise UsageError("argument --max-entry: must be at least 1")
        found = enumerate_fillings(shape, args.kind, top)
    if args.count:
        print(json.dumps({"count": len(found)}) if args.format == "json" else len(found))
    elif args.format == "json":
        _emit([filling_to_json(F) for F in found])
    else:
        print("\n\n".join(format_filling(F) for F in found))
    return 0


def _word(values) -> str:
    return " ".join(map(str, values))


def cmd_insert(args) -> int:
    F = Filling(args.rows, args.kind)
    if args.kind not in (Kind.RSCT, Kind.RRS):
        raise UsageError("argument --kind: insertion needs rsct or rrs")
    if not F.is_valid():
        raise UsageError(f"argument --rows: not a valid {args.kind.value}")
    if args.value < 1:
        raise UsageError("argument --value: must be positive")
    res = rsct_insert(F, args.value) if args.kind is Kind.RSCT else dual_row_insert(F, args.value)
    if args.format == "json":
        _emit({"input": filling_to_json(F), "value": args.value,
               "result": filling_to_json(res.result),
               "path": [list(c) for c in res.path], "new_cell": list(res.new_cell),
               "bumped": res.bumped,
               "steps": [{"value": s.value, "remaining": s.remaining, "diagram": s.diagram}
                         for s in res.steps]})
        return 0
    for s in res.steps:
        print(f"{s.value} -> {_word(s.remaining)}")
        print(format_filling(tuple(tuple(r) for r in s.diagram)))
        print()
    symbol = "⤙" if args.kind is Kind.RSCT else "<-"
    print(f"F {symbol} {args.value}:")
    print(format_filling(res.result))
    print("path: " + " ".join(f"({i},{k})" for i, k in res.path))
    return 0


def cmd_bijection(args) -> int:
    kind = args.kind or _MAP_INPUT[args.map]
    F = Filling(args.rows, kind)
    if not F.is_valid():
        print(f"warning: input is not a valid {kind.value}", file=sys.stderr)
    try:
        tr = bijections.trace(args.map, F)
    except (bijections.PlacementError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        _emit({"map": args.map, "input": filling_to_json(tr.input),
               "output": filling_to_json(tr.output),
               "steps": [{"entry": e, "cell": list(c)} for e, c in tr.steps]})
        return 0
    for line in tr.lines():
        print(line)
    print()
    print(format_filling(tr.output))
    return 0


def cmd_verify(args) -> int:
    if args.n < 1:
        raise UsageError("argument -n: must be at least 1")
    names = list(expansions.VERIFIERS) if args.identity == "all" else [args.identity]
    reports = [expansions.VERIFIERS[name](d) for name in names for d in range(1, args.n + 1)]
    if args.format == "json":
        _emit([r.to_json() for r in reports])
    else:
        for r in reports:
            print(r.summary())
    return 0 if all(r.passed for r in reports) else 1


COMMANDS = {
    "expand": cmd_expand, "matrix": cmd_matrix, "tableaux": cmd_tableaux,
    "insert": cmd_insert, "bijection": cmd_bijection, "verify": cmd_verify,
}


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format == "csv" and args.command != "matrix":
        print("error: --format csv is only supported by 'matrix'", file=sys.stderr)
        return 2
    if args.cache:
        expansions.load_cache(args.cache)
    try:
        code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BasisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.cache:
        expansions.save_cache(args.cache)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
