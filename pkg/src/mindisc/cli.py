"""Command-line front end: generation, discrepancy measurement, de Bruijn
validation, exact minimum search, and image rendering.

The data stream (stdout) carries exactly the payload; diagnostics go to
stderr. Exit codes: 0 success, 1 invalid input or failed validation,
2 indeterminate search.
"""

from __future__ import annotations

import argparse
import sys
from typing import IO, Iterable

from .analysis import CyclicSequence, discrepancy, validate_de_bruijn
from .generator import generate
from .search import Outcome, SearchBudget, min_discrepancy

__all__ = ["main", "run_main", "build_parser", "parse_sequence_text", "format_sequence"]

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INDETERMINATE = 2

GENERATE_SIZE_CAP = 1 << 40
RENDER_SIZE_CAP = 1 << 26

_WHITESPACE = set(" \t\r\n\v\f")


class CliError(Exception):
    """User-facing input error; message is printed to stderr."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors, which this tool reserves
    # for indeterminate searches
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _check_base_order(base: int, order: int, cap: int) -> None:
    if base < 2:
        raise CliError(f"base must be >= 2, got {base}")
    if order < 1:
        raise CliError(f"order must be >= 1, got {order}")
    if base ** order > cap:
        raise CliError(f"base**order = {base ** order} exceeds cap {cap}")


def parse_sequence_text(text: str, base: int, fmt: str) -> list[int]:
    """Parse DIGITS or CSV sequence text into symbols, validating range.

    Raises CliError with a position diagnostic on the first bad character
    or field.
    """
    symbols: list[int] = []
    if fmt == "digits":
        if base > 10:
            raise CliError("digits format supports base <= 10; use --format csv")
        for offset, ch in enumerate(text):
            if ch in _WHITESPACE:
                continue
            if not ch.isdigit():
                raise CliError(f"invalid character {ch!r} at offset {offset}")
            v = int(ch)
            if v >= base:
                raise CliError(f"symbol {v} out of range [0, {base}) at offset {offset}")
            symbols.append(v)
    elif fmt == "csv":
        stripped = text.strip()
        if stripped:
            for idx, field in enumerate(stripped.split(",")):
                field = field.strip()
                try:
                    v = int(field)
                except ValueError:
                    raise CliError(f"invalid field {field!r} at position {idx}") from None
                if not 0 <= v < base:
                    raise CliError(f"symbol {v} out of range [0, {base}) at position {idx}")
                symbols.append(v)
    else:  # pragma: no cover - argparse restricts choices
        raise CliError(f"unknown format {fmt!r}")
    if not symbols:
        raise CliError("input contains no symbols")
    return symbols


def format_sequence(symbols: Iterable[int], fmt: str, base: int) -> str:
    """Render symbols in the given format, newline-terminated."""
    if fmt == "digits":
        if base > 10:
            raise CliError("digits format supports base <= 10; use --format csv")
        return "".join(str(s) for s in symbols) + "\n"
    return ",".join(str(s) for s in symbols) + "\n"


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None


def _stream_generate(base: int, order: int, fmt: str, out: IO[str]) -> None:
    # incremental emission; nothing proportional to base**order is buffered
    chunk: list[str] = []
    first = True
    sep = "" if fmt == "digits" else ","
    for sym in generate(base, order):
        chunk.append(str(sym))
        if len(chunk) >= 8192:
            piece = sep.join(chunk)
            out.write(piece if first else sep + piece)
            first = False
            chunk.clear()
    if chunk:
        piece = sep.join(chunk)
        out.write(piece if first else sep + piece)
    out.write("\n")


def cmd_generate(args: argparse.Namespace) -> int:
    _check_base_order(args.base, args.order, GENERATE_SIZE_CAP)
    if args.format == "digits" and args.base > 10:
        raise CliError("digits format supports base <= 10; use --format csv")
    _stream_generate(args.base, args.order, args.format, sys.stdout)
    return EXIT_OK


def cmd_discrepancy(args: argparse.Namespace) -> int:
    if args.base < 2:
        raise CliError(f"base must be >= 2, got {args.base}")
    symbols = parse_sequence_text(_read_input(args.input), args.base, args.format)
    report = discrepancy(CyclicSequence(symbols, args.base))
    print(report.value)
    if args.verbose:
        print(
            f"witness start={report.start} length={report.length} "
            f"max-symbol={report.symbol_max} min-symbol={report.symbol_min}"
        )
    return EXIT_OK


def _window_text(window: tuple[int, ...], base: int) -> str:
    if base <= 10:
        return "".join(str(s) for s in window)
    return ",".join(str(s) for s in window)


def cmd_validate(args: argparse.Namespace) -> int:
    if args.base < 2:
        raise CliError(f"base must be >= 2, got {args.base}")
    if args.order < 1:
        raise CliError(f"order must be >= 1, got {args.order}")
    symbols = parse_sequence_text(_read_input(args.input), args.base, args.format)
    result = validate_de_bruijn(CyclicSequence(symbols, args.base), args.order)
    if result.ok:
        print("OK")
        return EXIT_OK
    if result.duplicate_positions is not None:
        i, j = result.duplicate_positions
        window = _window_text(result.duplicate_window, args.base)
        print(f"FAIL duplicate window {window} at positions {i} and {j}")
    else:
        print(f"FAIL {result.reason}")
    return EXIT_ERROR


def cmd_search_min(args: argparse.Namespace) -> int:
    if args.base < 2:
        raise CliError(f"base must be >= 2, got {args.base}")
    if args.order < 1:
        raise CliError(f"order must be >= 1, got {args.order}")
    try:
        budget = SearchBudget(time_limit=args.timeout, node_limit=args.nodes)
        result = min_discrepancy(args.base, args.order, budget)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if result.outcome is Outcome.INDETERMINATE:
        print("indeterminate")
        return EXIT_INDETERMINATE
    print(f"min={result.value}")
    if args.witness and result.witness is not None:
        fmt = "digits" if args.base <= 10 else "csv"
        sys.stdout.write(format_sequence(result.witness, fmt, args.base))
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    _check_base_order(args.base, args.order, RENDER_SIZE_CAP)
    width = args.base ** (args.order // 2)
    height = args.base ** ((args.order + 1) // 2)
    # symbol v maps to round(255 * (1 - v/(base-1))), half away from zero:
    # 0 renders white, k-1 renders black
    lut = bytes(int(255 * (1 - v / (args.base - 1)) + 0.5) for v in range(args.base))
    try:
        with open(args.output, "wb") as fh:
            fh.write(b"P5\n%d %d\n255\n" % (width, height))
            chunk = bytearray()
            for sym in generate(args.base, args.order):
                chunk.append(lut[sym])
                if len(chunk) >= 65536:
                    fh.write(chunk)
                    chunk.clear()
            if chunk:
                fh.write(chunk)
    except OSError as exc:
        raise CliError(f"cannot write {args.output}: {exc}") from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="mindisc",
        description="Minimum-discrepancy de Bruijn sequences: generate, "
        "measure, validate, search, render.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="stream a de Bruijn sequence")
    p.add_argument("--base", "-b", type=int, required=True, help="alphabet size")
    p.add_argument("--order", "-n", type=int, required=True, help="order n")
    p.add_argument("--format", choices=("digits", "csv"), default="digits")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("discrepancy", help="discrepancy of a sequence")
    p.add_argument("--base", "-b", type=int, required=True)
    p.add_argument("--format", choices=("digits", "csv"), default="digits")
    p.add_argument("--verbose", "-v", action="store_true",
                   help="also print a maximizing substring")
    p.add_argument("input", nargs="?", default="-",
                   help="input file, or - for stdin (default)")
    p.set_defaults(func=cmd_discrepancy)

    p = sub.add_parser("validate", help="check the de Bruijn property")
    p.add_argument("--base", "-b", type=int, required=True)
    p.add_argument("--order", "-n", type=int, required=True)
    p.add_argument("--format", choices=("digits", "csv"), default="digits")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("search-min", help="exact minimum attainable discrepancy")
    p.add_argument("--base", "-b", type=int, required=True)
    p.add_argument("--order", "-n", type=int, required=True)
    p.add_argument("--timeout", type=float, default=None, help="time limit in seconds")
    p.add_argument("--nodes", type=int, default=None, help="node expansion limit")
    p.add_argument("--witness", action="store_true", help="also print a witness")
    p.set_defaults(func=cmd_search_min)

    p = sub.add_parser("render", help="write the sequence as a PGM image")
    p.add_argument("--base", "-b", type=int, required=True)
    p.add_argument("--order", "-n", type=int, required=True)
    p.add_argument("--output", "-o", required=True, help="output PGM path")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"mindisc: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except BrokenPipeError:
        return EXIT_OK


def run_main() -> None:  # console-script entry point
    sys.exit(main())
