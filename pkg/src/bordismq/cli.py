"""Command-line front end.

Exit codes: 0 on success, 1 on usage or input errors, 2 when ``verify``
finds a failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import charnum
from .bordism_ring import CharVector, char_vector, format_element, from_char_vector
from .cohomology import SphereProduct, format_class
from .grassmann import GrassmannPair, thom_facts
from .partitions import Partition, enumerate_partitions
from .verify import MAX_VERIFY_N, run_checks

FORMATS = ("table", "json", "csv")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def cmd_partitions(n: int, fmt: str) -> str:
    if n < 0:
        raise UsageError("n must be nonnegative")
    parts = enumerate_partitions(n)
    if fmt == "json":
        return _dump({"n": n, "partitions": [p.to_json() for p in parts], "count": len(parts)})
    if fmt == "csv":
        return _csv([["index", "partition"]] + [[i, " ".join(map(str, p.parts))] for i, p in enumerate(parts)])
    return "".join(f"{p}\n" for p in parts) + f"count: {len(parts)}\n"


def cmd_matrix(n: int, fmt: str) -> str:
    if n < 2:
        raise UsageError("matrix needs n >= 2")
    mat = charnum.char_matrix(n)
    if fmt == "json":
        return _dump(mat.to_json())
    if fmt == "csv":
        return _csv(mat.entries)
    return charnum.render_table(mat) + f"\ndet = {charnum.determinant(mat)}\n"


def cmd_solve(path: str, fmt: str, n=None) -> str:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        v = CharVector.from_json(data)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed char vector: {exc}") from exc
    if n is not None and n != v.n:
        raise UsageError(f"--n {n} disagrees with n={v.n} in {path}")
    e = from_char_vector(v)
    residual_ok = char_vector(e, v.n) == v
    if fmt == "json":
        return _dump({"n": v.n, "element": e.to_json(), "residual_zero": residual_ok})
    if fmt == "csv":
        return _csv([["monomial", "coeff"]] + [[" ".join(map(str, r["monomial"])), r["coeff"]] for r in e.to_json()])
    return f"{format_element(e)}\nresidual: {'0' if residual_ok else 'NONZERO'}\n"


def cmd_ch(parts, fmt: str) -> str:
    nu = Partition.of(parts)
    ch = charnum.ch_boxtimes_generators(nu)
    base = SphereProduct(nu.parts)
    if fmt == "json":
        return _dump({"base": list(base.factor_degrees), "ch": ch.to_json()})
    rows = []
    for d in range(0, base.dimension + 1, 2):
        comp = charnum.coh.graded_component(ch, d)
        if d == 0 or not comp.is_zero():
            rows.append((d // 2, comp))
    if fmt == "csv":
        return _csv([["ch_index", "component"]] + [[i, format_class(c)] for i, c in rows])
    head = f"ch on {base}:"
    return head + "\n" + "".join(f"  ch_{i} = {format_class(c)}\n" for i, c in rows)


def cmd_gr(k: int, l: int, d: int, fmt: str) -> str:
    try:
        pair = GrassmannPair(k, l)
        facts = thom_facts(pair, d)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    record = facts.to_json()
    if fmt == "json":
        return _dump(record)
    if fmt == "csv":
        return _csv([list(record), ["" if v is None else v for v in record.values()]])
    return "".join(f"{key}: {'-' if v is None else v}\n" for key, v in record.items())


def cmd_verify(max_n: int, inject_fault: bool = False):
    if max_n < 0 or max_n > MAX_VERIFY_N:
        raise UsageError(f"--max-n must be in 0..{MAX_VERIFY_N}")
    fault = None
    if inject_fault and max_n >= 2:
        order = enumerate_partitions(max_n)
        fault = (max_n, order[-1], order[0])
    checks = run_checks(max_n, fault=fault)
    lines = []
    for c in checks:
        tail = f"  ({c.detail})" if c.detail else ""
        lines.append(f"{'PASS' if c.ok else 'FAIL'}  {c.name}{tail}\n")
    ok = all(c.ok for c in checks)
    lines.append(f"verify --max-n {max_n}: {'pass' if ok else 'FAIL'}\n")
    return "".join(lines), ok


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bordismq", description="Rational bordism ring of pairs: tables and solves.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p):
        p.add_argument("--format", choices=FORMATS, default="table")

    p = sub.add_parser("partitions", help="list partitions of n into parts >= 2")
    p.add_argument("n", type=int)
    fmt(p)

    p = sub.add_parser("matrix", help="characteristic-number matrix for degree 2n")
    p.add_argument("n", type=int)
    fmt(p)

    p = sub.add_parser("solve", help="recover the t-basis element from characteristic numbers")
    p.add_argument("--input", required=True, help="JSON file {n, values: [{partition, value}]}")
    p.add_argument("--n", type=int, default=None)
    fmt(p)

    p = sub.add_parser("verify", help="run the invariant checks")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    p = sub.add_parser("ch", help="Chern character of an exterior product of generators")
    p.add_argument("parts", type=int, nargs="+", help="sphere factors n_i (S^{2 n_i})")
    fmt(p)

    p = sub.add_parser("gr", help="stable-range facts for Gr_{k,l}")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--d", type=int, default=0)
    fmt(p)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "partitions":
            out = cmd_partitions(args.n, args.format)
        elif args.command == "matrix":
            out = cmd_matrix(args.n, args.format)
        elif args.command == "solve":
            out = cmd_solve(args.input, args.format, args.n)
        elif args.command == "ch":
            out = cmd_ch(args.parts, args.format)
        elif args.command == "gr":
            out = cmd_gr(args.k, args.l, args.d, args.format)
        else:
            out, ok = cmd_verify(args.max_n, args.inject_fault)
            sys.stdout.write(out)
            return 0 if ok else 2
    except (UsageError, ValueError) as exc:
        print(f"bordismq: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
