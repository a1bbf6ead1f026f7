"""Command-line front end: count, list, verify, rank, unrank, bench.

Sizes on the command line are ground-set sizes (2n), not pair counts.
Exit codes: 0 success, 1 semantically invalid input, 2 usage or range
error, 3 arithmetic overflow (reserved; unreachable here because Python
integers are arbitrary precision).
"""

import argparse
import os
import sys
from typing import Sequence

from fpfi.bench import run_bench
from fpfi.core import ValidationError, count, iter_buffers, rank_of, unrank
from fpfi.formats import FORMATS, FormatError, emit_line, line_to_involution
from fpfi.oracle import OracleSizeError

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_OVERFLOW = 3


def _ground_size(text: str) -> int:
    try:
        size = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if size < 0:
        raise argparse.ArgumentTypeError("ground-set size must be non-negative")
    if size % 2:
        raise argparse.ArgumentTypeError(
            f"ground-set size must be even; no fixed-point-free involution exists on {size} elements"
        )
    return size


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError("value must be non-negative")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value == 0:
        raise argparse.ArgumentTypeError("value must be positive")
    return value


def _add_format_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default="pairs",
        help="line format (default: pairs)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fpfi",
        description="Enumerate, verify, rank, and benchmark fixed-point-free involutions on {1..2n}.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("count", help="print how many involutions exist at a ground size")
    p.add_argument("size", type=_ground_size, help="ground-set size 2n (even)")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("list", help="print involutions in rank order")
    p.add_argument("size", type=_ground_size, help="ground-set size 2n (even)")
    _add_format_option(p)
    p.add_argument("--start", type=_non_negative, default=0, help="first rank to print (default 0)")
    p.add_argument("--limit", type=_non_negative, default=None, help="print at most this many lines")
    p.set_defaults(func=_cmd_list)

    p = sub.add_parser("verify", help="validate involution lines from a file or stdin")
    _add_format_option(p)
    p.add_argument("file", nargs="?", default=None, help="input file (default: stdin)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("rank", help="print the rank of each involution line read from stdin")
    _add_format_option(p)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("unrank", help="print the involution at a given rank")
    p.add_argument("size", type=_ground_size, help="ground-set size 2n (even)")
    p.add_argument("rank", type=_non_negative, help="rank in [0, count)")
    _add_format_option(p)
    p.set_defaults(func=_cmd_unrank)

    p = sub.add_parser("bench", help="measure enumeration throughput")
    p.add_argument("size", type=_ground_size, help="ground-set size 2n (even)")
    p.add_argument(
        "--compare-oracle",
        action="store_true",
        help="also time the permutation-filter baseline and report the speedup",
    )
    p.add_argument("--reps", type=_positive, default=3, help="timed repetitions (default 3)")
    p.set_defaults(func=_cmd_bench)

    return parser


def _usage_error(message: str) -> int:
    print(f"fpfi: error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _cmd_count(args: argparse.Namespace) -> int:
    print(count(args.size // 2))
    return EXIT_OK


def _cmd_list(args: argparse.Namespace) -> int:
    n = args.size // 2
    total = count(n)
    if args.start >= total:
        return _usage_error(f"start rank {args.start} is outside 0..{total - 1}")
    if args.limit == 0:
        return EXIT_OK
    out = sys.stdout
    emitted = 0
    for rank, buf in enumerate(iter_buffers(n, start=args.start), start=args.start):
        out.write(emit_line(buf, args.format, rank))
        out.write("\n")
        emitted += 1
        if args.limit is not None and emitted >= args.limit:
            break
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.file is None:
        stream = sys.stdin
        close = False
    else:
        try:
            stream = open(args.file, "r", encoding="utf-8")
        except OSError as exc:
            return _usage_error(f"cannot read {args.file!r}: {exc}")
        close = True
    try:
        checked = 0
        for number, raw in enumerate(stream, 1):
            line = raw.rstrip("\r\n")
            try:
                inv, claimed_rank = line_to_involution(line, args.format)
            except FormatError as exc:
                print(f"line {number}: unparseable: {exc}")
                return EXIT_USAGE
            except ValidationError as exc:
                print(f"line {number}: {exc.code}: {exc}")
                return EXIT_INVALID
            if claimed_rank is not None:
                actual = rank_of(inv)
                if claimed_rank != actual:
                    print(f"line {number}: rank-mismatch: line claims {claimed_rank}, actual rank is {actual}")
                    return EXIT_INVALID
            checked += 1
        print(f"OK {checked}")
        return EXIT_OK
    finally:
        if close:
            stream.close()


def _cmd_rank(args: argparse.Namespace) -> int:
    for number, raw in enumerate(sys.stdin, 1):
        line = raw.rstrip("\r\n")
        try:
            inv, _ = line_to_involution(line, args.format)
        except FormatError as exc:
            return _usage_error(f"line {number}: unparseable: {exc}")
        except ValidationError as exc:
            print(f"fpfi: error: line {number}: {exc.code}: {exc}", file=sys.stderr)
            return EXIT_INVALID
        print(rank_of(inv))
    return EXIT_OK


def _cmd_unrank(args: argparse.Namespace) -> int:
    n = args.size // 2
    total = count(n)
    if args.rank >= total:
        return _usage_error(f"rank {args.rank} is outside 0..{total - 1} for ground size {args.size}")
    inv = unrank(n, args.rank)
    print(emit_line(inv.slots, args.format, args.rank))
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    try:
        report = run_bench(args.size, compare_oracle=args.compare_oracle, reps=args.reps)
    except OracleSizeError as exc:
        return _usage_error(str(exc))
    print("# method size outputs candidates checksum seconds outputs_per_sec")
    for row in report.rows:
        print(
            f"{row.method} {row.size} {row.outputs} {row.candidates} "
            f"{row.checksum} {row.seconds:.6f} {row.rate:.1f}"
        )
    if report.speedup is not None:
        print(f"speedup {report.speedup:.1f}")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream closed the pipe (e.g. piping into head); exit quietly
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
