"""Command line interface: ``zmgroups {validate,subgroups,normal,export,scan}``.

Exit codes: 0 success, 1 usage or I/O error, 2 invalid triple, 3 a
verification check failed.
"""

from __future__ import annotations

import argparse
import io
import sys
from typing import Optional, Sequence

from . import oracle
from .core import InvalidTripleError, validate_triple
from .export import lattice_document, to_dot, to_json
from .lattice import enumerate_L, subgroup_order
from .normal import enumerate_normal, is_normal_criterion
from .scan import CHECKS, run_scan, write_csv

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_triple(p: argparse.ArgumentParser) -> None:
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)


def _add_out(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zmgroups", description="Subgroup lattices of ZM(m,n,r).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check that (m,n,r) defines a ZM-group")
    _add_triple(p)

    for name, help_ in (("subgroups", "list all subgroups"), ("normal", "list normal subgroups")):
        p = sub.add_parser(name, help=help_)
        _add_triple(p)
        p.add_argument("--format", choices=("table", "json"), default="table")
        _add_out(p)

    p = sub.add_parser("export", help="export a lattice as DOT or JSON")
    _add_triple(p)
    p.add_argument("--lattice", choices=("full", "normal"), default="full")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    _add_out(p)

    p = sub.add_parser("scan", help="verify every triple with m*n <= MAX_ORDER")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--check", choices=CHECKS, default="all")
    p.add_argument("--jobs", type=int, default=1)
    _add_out(p)
    return parser


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _table(t, triples, normal_only: bool) -> str:
    lines = [f"{'m1':>6} {'n1':>6} {'s':>6} {'order':>8}  normal"]
    for st in triples:
        flag = "yes" if normal_only or is_normal_criterion(t, st) else "no"
        lines.append(f"{st.m1:>6} {st.n1:>6} {st.s:>6} {subgroup_order(t, st):>8}  {flag}")
    return "\n".join(lines) + "\n"


def _cmd_validate(t) -> str:
    kind = f", cyclic Z_{t.n}" if t.m == 1 else ""
    return f"valid: ZM({t.m},{t.n},{t.r}) r={t.r} d={t.d} order={t.order}{kind}\n"


def _cmd_listing(t, args) -> str:
    normal_only = args.command == "normal"
    if args.format == "json":
        return to_json(lattice_document(t, "normal" if normal_only else "full"))
    triples = enumerate_normal(t) if normal_only else enumerate_L(t)
    text = _table(t, triples, normal_only)
    if normal_only:
        doc = lattice_document(t, "normal")
        fmt = lambda v: "n/a" if v is None else str(v)  # noqa: E731
        text += (
            f"eq1={doc['normal_count_eq1']} eq2={fmt(doc['normal_count_eq2'])} "
            f"eq3={fmt(doc['normal_count_eq3'])} chain={str(doc['is_chain']).lower()}\n"
        )
    else:
        text += f"{len(triples)} subgroups\n"
    return text


def _cmd_scan(args) -> int:
    if args.max_order < 1:
        print("zmgroups: --max-order must be positive", file=sys.stderr)
        return EXIT_USAGE
    if args.check == "all" and args.max_order > oracle.MAX_ORDER:
        print(
            f"zmgroups: --check all needs --max-order <= {oracle.MAX_ORDER} (oracle bound)",
            file=sys.stderr,
        )
        return EXIT_USAGE
    buf = io.StringIO()
    results = list(run_scan(args.max_order, args.check, args.jobs))
    failed = write_csv(results, buf)
    _emit(buf.getvalue(), args.out)
    print(f"scanned {len(results)} triples, {len(failed)} failing", file=sys.stderr)
    if failed:
        first = failed[0]
        print(f"first counterexample: {first.group}: {'; '.join(first.failures)}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "scan":
            return _cmd_scan(args)
        try:
            t = validate_triple(args.m, args.n, args.r)
        except InvalidTripleError as exc:
            print(f"invalid: {exc}", file=sys.stderr)
            return EXIT_INVALID
        # full Hasse diagrams materialize every subgroup
        full = (args.command == "subgroups" and args.format == "json") or (
            args.command == "export" and args.lattice == "full"
        )
        if full and t.order > oracle.MAX_ORDER:
            print(f"zmgroups: full lattice limited to order <= {oracle.MAX_ORDER}", file=sys.stderr)
            return EXIT_USAGE
        if args.command == "validate":
            text = _cmd_validate(t)
        elif args.command == "export":
            doc = lattice_document(t, args.lattice)
            text = to_dot(doc) if args.format == "dot" else to_json(doc)
        else:
            text = _cmd_listing(t, args)
        _emit(text, getattr(args, "out", None))
    except OSError as exc:
        print(f"zmgroups: cannot write {exc.filename}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
