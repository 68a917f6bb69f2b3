"""Command-line front end: queries, tables, psi inspection, verification.

Verbs:
    degree    one exact degree value for (m, n, r)
    bidegree  the full coefficient table for fixed (n, r)
    table     all coefficient tables for a given n (every rank bound)
    psi       psi of one index sequence, optionally cross-checked
    verify    run the closed-form / minor-sum cross-check over a query sweep

Exit codes: 0 success, 1 usage or domain error, 2 verification mismatch.
Big integers always serialize as decimal strings, never as JSON numbers.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass

from .degree import OracleMismatchError, allowable_range, degree, degree_verified
from .indexseq import format_sequence, parse_sequence
from .psi import PsiCache, psi_closed, psi_oracle

CSV_COLUMNS = ["m", "n", "r", "value", "term_count", "in_range"]


@dataclass
class Command:
    verb: str
    m: int | None = None
    n: int | None = None
    r: int | None = None
    seq: tuple[int, ...] | None = None
    oracle: bool = False
    fmt: str = "plain"
    threads: int = 1
    cache_path: str | None = None


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1; argparse's default of 2 is reserved for
    # verification mismatches
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="sdpdegree", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["plain", "csv", "json"], default="plain",
                        help="output format (default: plain)")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker count (default: machine parallelism)")
    common.add_argument("--cache", metavar="PATH", default=None,
                        help="psi cache file to load before and save after the run")

    verbs = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    sub = verbs.add_parser("degree", parents=[common], help="one degree value")
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--r", type=int, required=True)

    sub = verbs.add_parser("bidegree", parents=[common],
                           help="coefficient table over the allowable m range")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--r", type=int, required=True)

    sub = verbs.add_parser("table", parents=[common],
                           help="coefficient tables for every rank bound of one n")
    sub.add_argument("--n", type=int, required=True)

    sub = verbs.add_parser("psi", parents=[common], help="psi of one index sequence")
    sub.add_argument("--seq", required=True, metavar="I",
                     help="comma-separated strictly increasing entries, e.g. 2,3,4")
    sub.add_argument("--oracle", action="store_true",
                     help="also evaluate the minor-sum route and compare")

    sub = verbs.add_parser("verify", parents=[common],
                           help="cross-check both routes over a sweep")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--m", type=int, default=None, help="fix m (default: sweep)")
    sub.add_argument("--r", type=int, default=None, help="fix r (default: sweep)")

    return parser


def parse_args(argv: list[str]) -> Command:
    """Total mapping from an argument vector to a Command; anything
    malformed (unknown flags included) raises SystemExit(1) with usage."""
    parser = _build_parser()
    ns = parser.parse_args(argv)
    if ns.threads < 1:
        parser.error(f"--threads must be >= 1, got {ns.threads}")
    seq = None
    if getattr(ns, "seq", None) is not None:
        try:
            seq = parse_sequence(ns.seq)
        except ValueError as exc:
            parser.error(str(exc))
    return Command(
        verb=ns.verb,
        m=getattr(ns, "m", None),
        n=getattr(ns, "n", None),
        r=getattr(ns, "r", None),
        seq=seq,
        oracle=getattr(ns, "oracle", False),
        fmt=ns.format,
        threads=ns.threads,
        cache_path=ns.cache,
    )


def _load_cache(path: str | None) -> PsiCache:
    if path is None or not os.path.exists(path):
        return PsiCache()
    try:
        return PsiCache.load(path)
    except (OSError, ValueError) as exc:
        print(f"warning: ignoring cache file {path}: {exc}", file=sys.stderr)
        return PsiCache()


def _save_cache(cache: PsiCache, path: str | None) -> None:
    if path is None:
        return
    try:
        cache.save(path)
    except OSError as exc:
        print(f"warning: could not write cache file {path}: {exc}", file=sys.stderr)


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _row(m: int, n: int, r: int, result) -> dict:
    return {
        "m": m,
        "n": n,
        "r": r,
        "value": str(result.value),
        "term_count": result.term_count,
        "in_range": result.in_range,
    }


def _print_csv(rows: list[dict]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([row["m"], row["n"], row["r"], row["value"],
                         row["term_count"], str(row["in_range"]).lower()])
    sys.stdout.write(buf.getvalue())


def _print_rows_plain(rows: list[dict]) -> None:
    for row in rows:
        print(f"degree(m={row['m']}, n={row['n']}, r={row['r']}) = {row['value']}"
              f"  [terms={row['term_count']}, in_range={_yesno(row['in_range'])}]")


def _emit_table(verb: str, rows: list[dict], fmt: str, elapsed_ms: float, extra: dict) -> None:
    if fmt == "csv":
        _print_csv(rows)
    elif fmt == "json":
        payload = {"command": verb, **extra, "rows": rows, "elapsed_ms": elapsed_ms}
        print(json.dumps(payload))
    else:
        _print_rows_plain(rows)
        print(f"({len(rows)} rows, {elapsed_ms:.1f} ms)")


def _run_degree(cmd: Command, cache: PsiCache) -> int:
    start = time.perf_counter()
    result = degree(cmd.m, cmd.n, cmd.r, cache, threads=cmd.threads)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    row = _row(cmd.m, cmd.n, cmd.r, result)
    if cmd.fmt == "csv":
        _print_csv([row])
    elif cmd.fmt == "json":
        print(json.dumps({"command": "degree", **row, "elapsed_ms": elapsed_ms}))
    else:
        print(f"degree(m={cmd.m}, n={cmd.n}, r={cmd.r}) = {result.value}")
        print(f"terms={result.term_count}  in_range={_yesno(result.in_range)}"
              f"  elapsed={elapsed_ms:.1f} ms")
    return 0


def _bidegree_rows(n: int, r: int, cache: PsiCache, threads: int) -> list[dict]:
    m_min, m_max = allowable_range(n, r)
    return [_row(m, n, r, degree(m, n, r, cache, threads=threads))
            for m in range(m_min, m_max + 1)]


def _run_bidegree(cmd: Command, cache: PsiCache) -> int:
    start = time.perf_counter()
    rows = _bidegree_rows(cmd.n, cmd.r, cache, cmd.threads)
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    _emit_table("bidegree", rows, cmd.fmt, elapsed_ms, {"n": cmd.n, "r": cmd.r})
    return 0


def _run_table(cmd: Command, cache: PsiCache) -> int:
    start = time.perf_counter()
    rows = []
    for r in range(1, cmd.n):
        rows.extend(_bidegree_rows(cmd.n, r, cache, cmd.threads))
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    _emit_table("table", rows, cmd.fmt, elapsed_ms, {"n": cmd.n})
    return 0


def _run_psi(cmd: Command, cache: PsiCache) -> int:
    text = format_sequence(cmd.seq)
    start = time.perf_counter()
    closed = psi_closed(cmd.seq, cache)
    record = {"command": "psi", "seq": text, "value": str(closed)}
    agree = True
    if cmd.oracle:
        oracle = psi_oracle(cmd.seq)
        agree = oracle == closed
        record["oracle_value"] = str(oracle)
        record["agree"] = agree
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    record["elapsed_ms"] = elapsed_ms
    if cmd.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if cmd.oracle:
            writer.writerow(["seq", "value", "oracle_value", "agree"])
            writer.writerow([text, record["value"], record["oracle_value"],
                             str(agree).lower()])
        else:
            writer.writerow(["seq", "value"])
            writer.writerow([text, record["value"]])
        sys.stdout.write(buf.getvalue())
    elif cmd.fmt == "json":
        print(json.dumps(record))
    else:
        print(f"psi({text}) = {closed}")
        if cmd.oracle:
            print(f"oracle({text}) = {record['oracle_value']}")
            print(f"routes agree: {_yesno(agree)}")
    if not agree:
        print(f"error: psi routes disagree on {text}", file=sys.stderr)
        return 2
    return 0


def _run_verify(cmd: Command, cache: PsiCache) -> int:
    top = cmd.n * (cmd.n + 1) // 2
    ms = [cmd.m] if cmd.m is not None else range(top + 1)
    rs = [cmd.r] if cmd.r is not None else range(cmd.n + 1)
    rows = []
    start = time.perf_counter()
    try:
        for r in rs:
            for m in ms:
                result = degree_verified(m, cmd.n, r, cache)
                rows.append(_row(m, cmd.n, r, result))
    except OracleMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    if cmd.fmt == "csv":
        _print_csv(rows)
    elif cmd.fmt == "json":
        print(json.dumps({"command": "verify", "n": cmd.n, "checked": len(rows),
                          "all_agree": True, "elapsed_ms": elapsed_ms}))
    else:
        print(f"verified {len(rows)} queries for n={cmd.n}: both routes agree"
              f"  ({elapsed_ms:.1f} ms)")
    return 0


_HANDLERS = {
    "degree": _run_degree,
    "bidegree": _run_bidegree,
    "table": _run_table,
    "psi": _run_psi,
    "verify": _run_verify,
}


def run(cmd: Command) -> int:
    """Execute a parsed command; returns the process exit status."""
    cache = _load_cache(cmd.cache_path)
    try:
        status = _HANDLERS[cmd.verb](cmd, cache)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _save_cache(cache, cmd.cache_path)
    return status


def main(argv: list[str] | None = None) -> int:
    try:
        cmd = parse_args(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return run(cmd)


if __name__ == "__main__":
    sys.exit(main())
