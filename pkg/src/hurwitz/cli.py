"""Command-line interface.

Usage:
    hurwitz compute -g 0 -p 2,1 --method closed,dfs
    hurwitz table -g 1 --dmax 5 --format csv
    hurwitz verify --dmax 4 --suite all
    hurwitz pde-check -g 1 -D 6
    hurwitz genus2 --dmax 5

Exit codes: 0 success/agreement, 1 verified mismatch, 2 usage or budget error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .closed_form import geotree_convert, graph_count_genus1, hurwitz_closed, tree_count_genus0
from .errors import BudgetExceeded, HurwitzError, ValidationError
from .factorization import (
    connected_sieve,
    hurwitz_from_factorizations,
    transitive_factorization_count_dfs,
)
from .graphs import DEFAULT_GRAPH_CAP, genus1_count_oracle, tree_count_oracle
from .partitions import (
    Partition,
    conjugacy_class_size,
    format_rational,
    make_partition,
    parse_partition,
    partitions_of,
    r_value,
)
from .recursion import HurwitzTable, genus2_conjecture, hurwitz_recursive, load_table, save_table
from .series import verify_pde

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

METHODS = ("closed", "recursion", "dfs", "sieve", "graph", "conjecture")
GENUS2_METHODS = ("conjecture", "dfs", "sieve")
SUITES = ("closed-recursion", "closed-dfs", "dfs-sieve", "graph-formula", "geotree")
VERIFY_BUDGET = 10**6


class UsageError(HurwitzError):
    pass


def _open_table(path: str | None) -> HurwitzTable:
    if path and Path(path).exists():
        return load_table(path)
    return HurwitzTable()


def _close_table(table: HurwitzTable, path: str | None):
    if path:
        save_table(table, path)


def _parse_methods(text: str, genus: int) -> list[str]:
    methods = [m.strip() for m in text.split(",") if m.strip()]
    if not methods:
        raise UsageError("no method given")
    out = []
    for m in methods:
        if genus == 2 and m == "recursion":
            m = "conjecture"
        if m not in METHODS:
            raise UsageError(f"unknown method {m!r}; choose from {', '.join(METHODS)}")
        if genus == 2 and m not in GENUS2_METHODS:
            raise UsageError(f"method {m!r} is not available for genus 2")
        if genus < 2 and m == "conjecture":
            raise UsageError("the conjecture method only applies to genus 2")
        if m not in out:
            out.append(m)
    return out


def _graph_value(g: int, alpha: Partition, cap: int) -> Fraction:
    t = tree_count_oracle(alpha, cap) if g == 0 else genus1_count_oracle(alpha, cap)
    return geotree_convert(g, alpha, t)


def _compute_one(method: str, g: int, alpha: Partition, table: HurwitzTable, args) -> Fraction:
    if method == "closed":
        return hurwitz_closed(g, alpha)
    if method == "recursion":
        return hurwitz_recursive(g, alpha, table)
    if method == "conjecture":
        return genus2_conjecture(alpha.d, table, normalization=args.normalization)
    if method in ("dfs", "sieve"):
        return hurwitz_from_factorizations(g, alpha, method, budget=args.budget)
    if method == "graph":
        return _graph_value(g, alpha, args.graph_cap)
    raise UsageError(f"unknown method {method!r}")


def _emit(text: str, out):
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _csv(rows: list[list], header: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_compute(args, out) -> int:
    g = args.genus
    alpha = parse_partition(args.partition)
    if g not in (0, 1, 2):
        raise UsageError(f"genus must be 0, 1 or 2, got {g}")
    methods = _parse_methods(args.method, g)
    if g == 2 and alpha != make_partition([1] * alpha.d):
        raise UsageError("genus 2 is only available for the partition 1,1,...,1")
    table = _open_table(args.cache)
    values = {m: _compute_one(m, g, alpha, table, args) for m in methods}
    _close_table(table, args.cache)
    agreement = len(set(values.values())) == 1
    r = r_value(g, alpha)

    if args.format == "json":
        payload = {
            "genus": g,
            "partition": list(alpha.parts),
            "r": r,
            "values": {m: format_rational(v) for m, v in values.items()},
            "agreement": agreement,
        }
        _emit(json.dumps(payload), out)
    elif args.format == "csv":
        rows = [[g, str(alpha), r, m, format_rational(v), format_rational(v * alpha.part_product)]
                for m, v in values.items()]
        _emit(_csv(rows, ["genus", "partition", "r", "method", "G", "c"]), out)
    else:
        lines = [f"genus {g}  partition {alpha}  d={alpha.d}  r={r}  h={conjugacy_class_size(alpha)}"]
        width = max(len(m) for m in methods)
        for m, v in values.items():
            lines.append(f"  {m:<{width}}  G = {format_rational(v)}  c = {format_rational(v * alpha.part_product)}")
        lines.append(f"agreement: {'yes' if agreement else 'NO'}")
        _emit("\n".join(lines), out)
    return EXIT_OK if agreement else EXIT_MISMATCH


def _table_rows(g: int, dmax: int, route: str, table: HurwitzTable) -> list[dict]:
    rows = []
    for d in range(1, dmax + 1):
        for alpha in partitions_of(d):
            G = hurwitz_closed(g, alpha) if route == "closed" else hurwitz_recursive(g, alpha, table)
            c = G * alpha.part_product
            if c.denominator != 1:
                raise HurwitzError(f"non-integral c for {alpha}: {c}")
            rows.append({"d": d, "partition": str(alpha), "r": r_value(g, alpha),
                         "G": format_rational(G), "c": c.numerator})
    return rows


def cmd_table(args, out) -> int:
    if args.genus not in (0, 1):
        raise UsageError("table supports genus 0 and 1")
    if args.dmax < 1:
        raise UsageError("--dmax must be at least 1")
    table = _open_table(args.cache)
    rows = _table_rows(args.genus, args.dmax, args.method, table)
    _close_table(table, args.cache)
    header = ["d", "partition", "r", "G", "c"]
    if args.format == "json":
        _emit(json.dumps(rows), out)
    elif args.format == "csv":
        _emit(_csv([[row[k] for k in header] for row in rows], header), out)
    else:
        widths = {k: max(len(k), *(len(str(row[k])) for row in rows)) for k in header}
        lines = ["  ".join(f"{k:>{widths[k]}}" for k in header)]
        for row in rows:
            lines.append("  ".join(f"{str(row[k]):>{widths[k]}}" for k in header))
        _emit("\n".join(lines), out)
    return EXIT_OK


def _parse_suites(text: str) -> list[str]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    if names == ["all"]:
        return list(SUITES)
    for s in names:
        if s not in SUITES:
            raise UsageError(f"unknown suite {s!r}; choose from all, {', '.join(SUITES)}")
    return names


def _verify_cells(suite: str, dmax: int, args, table: HurwitzTable):
    """Yield (status, label, detail) for every cell of one suite."""
    for d in range(1, dmax + 1):
        for alpha in partitions_of(d):
            if suite == "dfs-sieve":
                for r in range(r_value(1, alpha) + 1):
                    label = f"{alpha} r={r}"
                    try:
                        a = transitive_factorization_count_dfs(alpha, r, budget=args.budget)
                    except BudgetExceeded as exc:
                        yield "SKIP", label, str(exc)
                        continue
                    b = connected_sieve(alpha, r)
                    yield ("PASS" if a == b else "FAIL"), label, f"dfs={a} sieve={b}"
                continue
            for g in (0, 1):
                label = f"g={g} {alpha}"
                if suite == "closed-recursion":
                    a, b = hurwitz_closed(g, alpha), hurwitz_recursive(g, alpha, table)
                    names = ("closed", "recursion")
                elif suite == "closed-dfs":
                    try:
                        b = hurwitz_from_factorizations(g, alpha, "dfs", budget=args.budget)
                    except BudgetExceeded as exc:
                        yield "SKIP", label, str(exc)
                        continue
                    a = hurwitz_closed(g, alpha)
                    names = ("closed", "dfs")
                elif suite == "graph-formula":
                    if d > args.graph_cap:
                        yield "SKIP", label, f"graph census capped at d <= {args.graph_cap}"
                        continue
                    if g == 0:
                        a, b = tree_count_genus0(alpha), Fraction(tree_count_oracle(alpha, args.graph_cap))
                    else:
                        a, b = graph_count_genus1(alpha), genus1_count_oracle(alpha, args.graph_cap)
                    names = ("formula", "census")
                else:
                    t = tree_count_genus0(alpha) if g == 0 else graph_count_genus1(alpha)
                    a, b = geotree_convert(g, alpha, t), hurwitz_closed(g, alpha)
                    names = ("from-graphs", "closed")
                detail = f"{names[0]}={format_rational(a)} {names[1]}={format_rational(b)}"
                yield ("PASS" if a == b else "FAIL"), label, detail


def cmd_verify(args, out) -> int:
    if args.dmax < 1:
        raise UsageError("--dmax must be at least 1")
    suites = _parse_suites(args.suite)
    table = _open_table(args.cache)
    counts = {"PASS": 0, "FAIL": 0, "SKIP": 0}
    records = []
    for suite in suites:
        for status, label, detail in _verify_cells(suite, args.dmax, args, table):
            counts[status] += 1
            records.append({"suite": suite, "cell": label, "status": status, "detail": detail})
    _close_table(table, args.cache)
    ok = counts["FAIL"] == 0
    if args.format == "json":
        _emit(json.dumps({"passed": ok, "counts": counts, "cells": records}), out)
    elif args.format == "csv":
        _emit(_csv([[r["suite"], r["cell"], r["status"], r["detail"]] for r in records],
                   ["suite", "cell", "status", "detail"]), out)
    else:
        lines = [f"{r['status']}  {r['suite']:<16}  {r['cell']:<22}  {r['detail']}" for r in records]
        lines.append(f"{'pass' if ok else 'FAIL'}: {counts['PASS']} checked, "
                     f"{counts['FAIL']} failed, {counts['SKIP']} skipped")
        _emit("\n".join(lines), out)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_pde_check(args, out) -> int:
    if args.genus not in (0, 1):
        raise UsageError("pde-check supports genus 0 and 1")
    if args.order < 1:
        raise ValidationError("truncation order -D must be at least 1")
    report = verify_pde(args.genus, args.order, args.method)
    lines = report.residual_lines()
    if args.format == "json":
        _emit(json.dumps({"genus": args.genus, "D": args.order, "residual": lines, "ok": report.ok}), out)
    else:
        _emit("\n".join([f"residual: {len(lines)} monomials"] + lines), out)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_genus2(args, out) -> int:
    if args.dmax < 1:
        raise UsageError("--dmax must be at least 1")
    table = _open_table(args.cache)
    rows = []
    for d in range(1, args.dmax + 1):
        value = genus2_conjecture(d, table, normalization=args.normalization)
        sieve = connected_sieve(make_partition([1] * d), 2 * d + 2) if d <= args.sieve_dmax else None
        rows.append((d, value, sieve))
    _close_table(table, args.cache)
    mismatch = any(s is not None and v != s for _, v, s in rows)
    if args.format == "json":
        payload = [{"d": d, "conjecture": format_rational(v),
                    "sieve": None if s is None else str(s),
                    "match": None if s is None else v == s} for d, v, s in rows]
        _emit(json.dumps(payload), out)
    elif args.format == "csv":
        _emit(_csv([[d, format_rational(v), "" if s is None else s, "" if s is None else v == s]
                    for d, v, s in rows], ["d", "conjecture", "sieve", "match"]), out)
    else:
        lines = []
        for d, v, s in rows:
            tail = "" if s is None else f" (sieve: {s}, {'match' if v == s else 'MISMATCH'})"
            lines.append(f"d={d}: {format_rational(v)}{tail}")
        _emit("\n".join(lines), out)
    return EXIT_MISMATCH if mismatch else EXIT_OK


def _add_common(p: argparse.ArgumentParser, default_format: str = "text"):
    p.add_argument("--format", choices=("text", "json", "csv"), default=default_format)
    p.add_argument("--no-timing", action="store_true", help="omit the elapsed-time footer")
    p.add_argument("--cache", default=None, help="memo table file (loaded if present, saved after)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hurwitz", description="Exact genus 0/1/2 Hurwitz numbers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="G^g for one partition by one or more routes")
    p.add_argument("-g", "--genus", type=int, required=True)
    p.add_argument("-p", "--partition", required=True, help='e.g. "2,1"')
    p.add_argument("--method", default="closed", help=f"comma list from {', '.join(METHODS)}")
    p.add_argument("--budget", type=int, default=10**8, help="DFS leaf cap")
    p.add_argument("--graph-cap", type=int, default=DEFAULT_GRAPH_CAP)
    p.add_argument("--normalization", choices=("unlabelled", "labelled"), default="unlabelled")
    _add_common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="G^g for every partition up to a degree")
    p.add_argument("-g", "--genus", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--method", choices=("closed", "recursion"), default="closed")
    _add_common(p, "csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="cross-check the computation routes")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--suite", default="all", help=f"all or comma list from {', '.join(SUITES)}")
    p.add_argument("--budget", type=int, default=VERIFY_BUDGET, help="DFS leaf cap per cell")
    p.add_argument("--graph-cap", type=int, default=6)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pde-check", help="check the potential PDE at a truncation")
    p.add_argument("-g", "--genus", type=int, required=True)
    p.add_argument("-D", "--order", type=int, required=True)
    p.add_argument("--method", choices=("closed", "recursion"), default="closed")
    _add_common(p)
    p.set_defaults(func=cmd_pde_check)

    p = sub.add_parser("genus2", help="genus-2 relation for [1^d] with sieve cross-check")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--sieve-dmax", type=int, default=12)
    p.add_argument("--normalization", choices=("unlabelled", "labelled"), default="unlabelled")
    _add_common(p)
    p.set_defaults(func=cmd_genus2)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    start = time.perf_counter()
    try:
        code = args.func(args, out)
    except (HurwitzError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "text" and not args.no_timing:
        out.write(f"# elapsed {time.perf_counter() - start:.3f}s\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
