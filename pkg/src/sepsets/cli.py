"""Command-line interface: counting, enumeration, table generation, audits.

Exit codes: 0 success, 1 usage or validity error, 2 an audit found
mismatches (expected when auditing the known-bad printed variants).
Data goes to stdout, diagnostics to stderr, and output is byte-identical
for identical flags.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .audit import (
    DEFAULT_GRID,
    IdentityId,
    g_recurrence,
    h_recurrence,
    parse_grid,
    run_audit,
)
from .counting import (
    count_query,
    g_closed,
    g_from_h,
    h_closed_1,
    h_closed_2,
    h_closed_3,
    h_composition,
)
from .oracle import DEFAULT_CAP, EnumerationCapError, count_brute, list_brute
from .series import g_series, h_series

METHODS = (
    "auto",
    "closed1",
    "closed2",
    "closed3",
    "composition",
    "series",
    "recurrence",
    "brute",
)


class _Parser(argparse.ArgumentParser):
    # usage problems must exit 1, not argparse's default 2
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="sepsets", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_query_args(sp, with_k=True):
        sp.add_argument("--topology", required=True, choices=["line", "circle"])
        sp.add_argument("--n", required=True, type=int)
        if with_k:
            sp.add_argument("--k", required=True, type=int)
        sp.add_argument("--m", required=True, type=int)
        sp.add_argument("--p", required=True, type=int)
        sp.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="brute-force enumeration bound on n")

    sp_count = sub.add_parser("count", help="print one exact count")
    add_query_args(sp_count)
    sp_count.add_argument("--method", choices=METHODS, default="auto")

    sp_list = sub.add_parser("list", help="enumerate the subsets, one per line")
    add_query_args(sp_list)

    sp_table = sub.add_parser("table", help="emit an (n, k) grid of counts")
    sp_table.add_argument("--topology", required=True, choices=["line", "circle"])
    sp_table.add_argument("--m", required=True, type=int)
    sp_table.add_argument("--p", required=True, type=int)
    sp_table.add_argument("--n-max", required=True, type=int)
    sp_table.add_argument("--k-max", required=True, type=int)
    sp_table.add_argument("--format", choices=["csv", "json"], default="csv")
    sp_table.add_argument("--out", help="write to this file instead of stdout")
    sp_table.add_argument("--cap", type=int, default=DEFAULT_CAP)

    sp_audit = sub.add_parser("audit", help="verify identities over a grid")
    sp_audit.add_argument("--identity", required=True,
                          help="an identity id or 'all'")
    sp_audit.add_argument("--grid",
                          help="bounds like 'm<=3,p<=2,k<=4,n<=24' "
                               f"(default {DEFAULT_GRID.describe()})")
    sp_audit.add_argument("--format", choices=["json", "text"], default="text")
    sp_audit.add_argument("--cap", type=int, default=DEFAULT_CAP)

    return parser


def _count_line(n, k, m, p, method, cap):
    if method == "auto":
        method = "closed1" if n >= p * m * (k - 1) else "composition"
    if method == "composition":
        return h_composition(n, k, m, p), method
    if method == "closed1":
        return h_closed_1(n, k, m, p), method
    if method == "closed2":
        return h_closed_2(n, k, m, p), method
    if method == "closed3":
        return h_closed_3(n, k, m, p), method
    if method == "series":
        return h_series(n, k, m, p), method
    if method == "recurrence":
        return h_recurrence(n, k, m, p), method
    return count_brute(count_query("line", n, k, m, p), cap), "brute"


def _count_circle(n, k, m, p, method, cap):
    if method == "auto":
        method = "closed1" if n >= m * p * k + 1 else "brute"
    if method in ("closed2", "closed3"):
        raise ValueError(
            f"method {method} applies only to line topology; the circle has a "
            "single closed form (use closed1)"
        )
    if method == "closed1":
        return g_closed(n, k, m, p), method
    if method == "composition":
        return g_from_h(n, k, m, p), method
    if method == "series":
        return g_series(n, k, m, p), method
    if method == "recurrence":
        return g_recurrence(n, k, m, p, cap=cap), method
    return count_brute(count_query("circle", n, k, m, p), cap), "brute"


def _resolve_count(topology, n, k, m, p, method, cap):
    if topology == "line":
        return _count_line(n, k, m, p, method, cap)
    return _count_circle(n, k, m, p, method, cap)


def _cmd_count(args) -> int:
    value, _ = _resolve_count(args.topology, args.n, args.k, args.m, args.p,
                              args.method, args.cap)
    print(value)
    return 0


def _cmd_list(args) -> int:
    q = count_query(args.topology, args.n, args.k, args.m, args.p)
    for subset in list_brute(q, args.cap):
        print(",".join(str(pos) for pos in subset))
    return 0


def _cmd_table(args) -> int:
    rows = []
    brute_cells = []
    for n in range(args.n_max + 1):
        for k in range(args.k_max + 1):
            value, method = _resolve_count(
                args.topology, n, k, args.m, args.p, "auto", args.cap
            )
            rows.append((n, k, value, method))
            if args.topology == "circle" and method == "brute":
                brute_cells.append((n, k))

    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "k", "count"])
        for n, k, value, _ in rows:
            writer.writerow([n, k, value])
        text = buf.getvalue()
        if brute_cells:
            print(
                "note: brute-force cells (below the circle formula range): "
                + " ".join(f"({n},{k})" for n, k in brute_cells),
                file=sys.stderr,
            )
    else:
        payload = []
        for n, k, value, method in rows:
            cell = {"n": n, "k": k, "count": value}
            if args.topology == "circle" and method == "brute":
                cell["method"] = "brute"
            payload.append(cell)
        text = json.dumps(payload, indent=2) + "\n"

    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_audit(args) -> int:
    try:
        grid = parse_grid(args.grid) if args.grid else DEFAULT_GRID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.identity == "all":
        identities = list(IdentityId)
    else:
        try:
            identities = [IdentityId(args.identity)]
        except ValueError:
            valid = ", ".join(i.value for i in IdentityId)
            print(
                f"error: unknown identity {args.identity!r}; expected one of "
                f"{valid} or 'all'",
                file=sys.stderr,
            )
            return 1
    reports = [run_audit(identity, grid, args.cap) for identity in identities]
    if args.format == "json":
        payload = [r.to_json_dict() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    else:
        print("\n\n".join(r.to_text() for r in reports))
    return 2 if any(not r.passed for r in reports) else 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "count": _cmd_count,
        "list": _cmd_list,
        "table": _cmd_table,
        "audit": _cmd_audit,
    }
    try:
        return handlers[args.command](args)
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
