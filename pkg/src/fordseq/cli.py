"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
All output is ASCII and deterministic.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .compositions import colored_compositions, count_colored_compositions
from .ford import decompose, ford_by_concatenation, ford_by_greedy, max_order
from .recurrences import RecurrenceSequence
from .verify import DEFAULT_VERIFY_M, DEFAULT_VERIFY_ORDER, corrupted_constructor, run_verification
from .words import prefix_skew_profile, skew

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

ABSENT = "."


class UsageError(Exception):
    pass


def _write_csv(out, header: Sequence[str], rows) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def breakpoint_positions(n: int, text: str) -> dict[int, int]:
    """1-based position -> label ``i`` where ``0**i 1**(n-i)`` ends.

    The initial ``0`` carries label ``n`` and the final ``1`` label ``0``.
    """
    labels = {1: n, len(text): 0}
    for i in range(1, n):
        labels[text.find("0" * i + "1" * (n - i)) + n] = i
    return labels


def cmd_generate(args, out) -> int:
    if args.method == "greedy":
        f = ford_by_greedy(args.order)
    else:
        f = ford_by_concatenation(args.order)
    out.write(f"{f.word}\n")
    return EXIT_OK


def cmd_profile(args, out) -> int:
    f = ford_by_concatenation(args.order)
    text = str(f.word)
    profile = prefix_skew_profile(f.word).tolist()
    labels = breakpoint_positions(args.order, text)
    if args.format == "json":
        rows = [
            {"position": p, "bit": int(b), "skew": s, "breakpoint": labels.get(p)}
            for p, (b, s) in enumerate(zip(text, profile), start=1)
        ]
        out.write(json.dumps({"order": args.order, "rows": rows}) + "\n")
    else:
        rows = (
            (p, b, s, labels.get(p, ""))
            for p, (b, s) in enumerate(zip(text, profile), start=1)
        )
        _write_csv(out, ("position", "bit", "skew", "breakpoint"), rows)
    return EXIT_OK


def suffix_tables(max_n: int) -> tuple[list[list[int]], list[list[int]]]:
    """Rows ``n = 1..max_n`` of suffix skews and lengths for ``m = 0..n-1``."""
    skews, lengths = [], []
    for n in range(1, max_n + 1):
        d = decompose(ford_by_concatenation(n))
        suffixes = [d.suffix(m) for m in range(n)]
        skews.append([skew(s) for s in suffixes])
        lengths.append([len(s) for s in suffixes])
    return skews, lengths


def _padded(row: list[int], width: int) -> list[str]:
    return [str(v) for v in row] + [ABSENT] * (width - len(row))


def render_tables_text(skews, lengths) -> str:
    width = len(skews)
    blocks = []
    for title, table in (("suffix skew", skews), ("suffix length", lengths)):
        grid = [["n\\m"] + [str(m) for m in range(width)]]
        grid += [[str(n)] + _padded(row, width) for n, row in enumerate(table, start=1)]
        widths = [max(len(r[j]) for r in grid) for j in range(width + 1)]
        lines = [title] + [" ".join(c.rjust(w) for c, w in zip(r, widths)) for r in grid]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def render_tables_csv(skews, lengths) -> str:
    width = len(skews)
    buf = io.StringIO()
    rows = []
    for name, table in (("skew", skews), ("length", lengths)):
        rows += [[name, n] + _padded(row, width) for n, row in enumerate(table, start=1)]
    _write_csv(buf, ["table", "n"] + [str(m) for m in range(width)], rows)
    return buf.getvalue()


def cmd_tables(args, out) -> int:
    if args.max_order > max_order():
        raise UsageError(f"max order {args.max_order} exceeds the cap of {max_order()}")
    if args.max_order < 1:
        raise UsageError("max order must be positive")
    skews, lengths = suffix_tables(args.max_order)
    if args.format == "json":
        rows = [{"n": n, "skew": s, "length": l} for n, (s, l) in enumerate(zip(skews, lengths), start=1)]
        out.write(json.dumps({"order": args.max_order, "rows": rows}) + "\n")
    elif args.format == "csv":
        out.write(render_tables_csv(skews, lengths))
    else:
        out.write(render_tables_text(skews, lengths))
    return EXIT_OK


def _family(name: str, m: Optional[int]) -> RecurrenceSequence:
    if name == "F":
        return RecurrenceSequence((0, 1))
    if name == "L":
        return RecurrenceSequence((2, 1))
    if m is None:
        raise UsageError(f"sequence family {name} needs --m")
    if name == "G":
        return RecurrenceSequence.generalized_fibonacci(m)
    if name == "H":
        return RecurrenceSequence.generalized_lucas(m)
    return RecurrenceSequence.padded_fibonacci(m)


def cmd_seq(args, out) -> int:
    if args.count < 0:
        raise UsageError("--count must be non-negative")
    terms = [str(t) for t in _family(args.family, args.m).terms(args.count)]
    if args.comma:
        out.write(",".join(terms) + "\n")
    else:
        out.write("".join(t + "\n" for t in terms))
    return EXIT_OK


def cmd_compositions(args, out) -> int:
    if args.list:
        listed = colored_compositions(args.m, args.n)
        out.write("".join(f"{c}\n" for c in listed))
    else:
        out.write(f"{count_colored_compositions(args.m, args.n)}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.max_order > max_order():
        raise UsageError(f"max order {args.max_order} exceeds the cap of {max_order()}")
    construct = corrupted_constructor() if args.inject_fault else ford_by_concatenation
    report = run_verification(args.max_order, args.max_m, construct)
    out.write(report.to_json() if args.format == "json" else report.to_text())
    if not report.passed:
        failure = report.first_failure()
        sys.stderr.write(f"verification failed: {failure.name}: {failure.counterexample}\n")
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fordseq",
        description="Lex-least de Bruijn sequences, breakpoint suffixes, and their Fibonacci-like counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="print the Ford sequence of an order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--method", choices=("concat", "greedy"), default="concat")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("profile", help="prefix skew of every position, with breakpoint labels")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("tables", help="suffix skew and length tables")
    p.add_argument("--max-order", type=int, default=10)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("seq", help="terms of a recurrence family")
    p.add_argument("family", choices=("F", "L", "G", "H", "P"))
    p.add_argument("--m", type=int, help="recurrence order (G, H, P)")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--comma", action="store_true", help="comma-separated on one line")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("compositions", help="count or list colored compositions into parts >= 2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=1, help="number of colors")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_compositions)

    p = sub.add_parser("verify", help="run the full verification suite")
    p.add_argument("--max-order", type=int, default=DEFAULT_VERIFY_ORDER)
    p.add_argument("--max-m", type=int, default=DEFAULT_VERIFY_M)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, ValueError, OverflowError) as exc:
        sys.stderr.write(f"fordseq {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
