import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .cache import CountsCache
from .core import Cnat, DecompositionError, ValidationError, decompose, parse_grid, serialize_grid, validate
from .enumeration import ENUMERATION_MAX_N, count_by_det, iter_cnats
from .linalg import cnat_det
from .records import FORMATTERS, OutputRecord, Quantity, Source
from .render import render_ascii, render_svg
from .sequences import ab_seq, d_closed, d_rec, eo_row, t_seq
from .verify import format_report, run_verification

CLI_ENUMERATION_CEILING = 8

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(description="Complete non-ambiguous trees: enumeration and determinants")
    parser.add_argument(
        "-V", "--version",
        action="version",
        version=f"cnat {__version__}",
        help="Show the version number and exit"
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug messages")

    subparsers = parser.add_subparsers(dest="command", required=True)
    default_cache = os.environ.get("CNAT_CACHE")

    parser_validate = subparsers.add_parser("validate", help="Check a grid file against the CNAT axioms")
    parser_validate.add_argument("path", type=str, help="Path to a grid file")
    parser_validate.set_defaults(func=handle_validate)

    parser_count = subparsers.add_parser("count", help="Print T, A, B and D for one size")
    parser_count.add_argument("n", type=_positive_int, help="CNAT size")
    parser_count.add_argument("--source", choices=["enum", "rec", "closed"], default="rec",
                              help="Where the numbers come from")
    parser_count.add_argument("--format", choices=list(FORMATTERS), default="text", help="Output format")
    parser_count.add_argument("--cache", type=str, default=default_cache, metavar="PATH",
                              help="Counts cache file (default: $CNAT_CACHE)")
    parser_count.add_argument("--jobs", type=_positive_int, default=1, help="Worker processes for enumeration")
    parser_count.add_argument("--unsafe-large", action="store_true",
                              help=f"Allow enumeration up to n={ENUMERATION_MAX_N}")
    parser_count.set_defaults(func=handle_count)

    parser_table = subparsers.add_parser("table", help="Print T, A, B and D from the recurrences")
    parser_table.add_argument("--max-n", type=_positive_int, default=8, help="Largest size")
    parser_table.add_argument("--format", choices=list(FORMATTERS), default="text", help="Output format")
    parser_table.set_defaults(func=handle_table)

    parser_parity = subparsers.add_parser("parity", help="Print even/odd-sum subset counts of {1..m}")
    parser_parity.add_argument("m", type=int, help="Set size")
    parser_parity.add_argument("--format", choices=list(FORMATTERS), default="text", help="Output format")
    parser_parity.set_defaults(func=handle_parity)

    parser_verify = subparsers.add_parser("verify", help="Run every cross-check")
    parser_verify.add_argument("--max-n", type=_positive_int, default=7, help="Largest size for enumeration checks")
    parser_verify.add_argument("--slow", action="store_true", help="Include the n=5 oracle and n=8 counts")
    parser_verify.add_argument("--cache", type=str, default=default_cache, metavar="PATH",
                               help="Counts cache file (default: $CNAT_CACHE)")
    parser_verify.add_argument("--jobs", type=_positive_int, default=1, help="Worker processes for enumeration")
    parser_verify.set_defaults(func=handle_verify)

    parser_enumerate = subparsers.add_parser("enumerate", help="Print every CNAT of a size")
    parser_enumerate.add_argument("n", type=_positive_int, help="CNAT size")
    parser_enumerate.add_argument("--format", choices=["text", "json"], default="text", help="Output format")
    parser_enumerate.add_argument("--unsafe-large", action="store_true",
                                  help=f"Allow enumeration up to n={ENUMERATION_MAX_N}")
    parser_enumerate.set_defaults(func=handle_enumerate)

    parser_render = subparsers.add_parser("render", help="Draw a CNAT")
    parser_render.add_argument("path", type=str, help="Path to a grid file")
    parser_render.add_argument("--svg", action="store_true", help="Emit SVG instead of text")
    parser_render.set_defaults(func=handle_render)

    parser_decompose = subparsers.add_parser("decompose", help="Split a CNAT at its root")
    parser_decompose.add_argument("path", type=str, help="Path to a grid file")
    parser_decompose.set_defaults(func=handle_decompose)

    return parser


def _enumeration_limit(unsafe_large: bool) -> int:
    return ENUMERATION_MAX_N if unsafe_large else CLI_ENUMERATION_CEILING


def _refuse(n: int, limit: int) -> int:
    logging.error(f"Refusing to enumerate n={n}: the limit is {limit}"
                  + ("" if limit == ENUMERATION_MAX_N else f" (--unsafe-large raises it to {ENUMERATION_MAX_N})"))
    return EXIT_USAGE


def _read_grid(path: str):
    return parse_grid(Path(path).read_text())


def _load_cnat(path: str) -> Cnat:
    return validate(_read_grid(path))


def _format_set(values) -> str:
    return "{" + ",".join(str(v) for v in values) + "}"


def handle_validate(args) -> int:
    grid = _read_grid(args.path)
    try:
        cnat = validate(grid)
    except ValidationError as e:
        print(f"invalid: {e}")
        return EXIT_MISMATCH

    print(f"valid, n={cnat.n}, det={int(cnat_det(cnat))}")
    print(f"leaves: {' '.join(str(cell) for cell in cnat.leaves)}")
    for cell in sorted(cnat.dots):
        print(f"{cell} {cnat.roles[cell].value}")
    return EXIT_OK


def count_records(n: int, source: Source, cache: CountsCache | None = None, jobs: int = 1) -> list[OutputRecord]:
    """T, A, B and D of one size from the requested source."""
    if source is Source.ENUMERATION:
        a = cache.get(Quantity.A, n, source) if cache is not None else None
        b = cache.get(Quantity.B, n, source) if cache is not None else None
        if a is None or b is None:
            counts = count_by_det(n, jobs=jobs, total_count=t_seq(n)[n])
            a, b = counts.a, counts.b
            if cache is not None:
                cache.put(Quantity.A, n, source, a)
                cache.put(Quantity.B, n, source, b)
        values = [(Quantity.T, a + b, source), (Quantity.A, a, source),
                  (Quantity.B, b, source), (Quantity.D, a - b, source)]

    elif source is Source.RECURRENCE:
        a, b = ab_seq(n)
        values = [(Quantity.T, t_seq(n)[n], source), (Quantity.A, a[n], source),
                  (Quantity.B, b[n], source), (Quantity.D, d_rec(n)[n], source)]

    else:
        # The closed form gives D; A and B follow from T = A + B.
        t, d = t_seq(n)[n], d_closed(n)
        values = [(Quantity.T, t, Source.RECURRENCE), (Quantity.A, (t + d) // 2, source),
                  (Quantity.B, (t - d) // 2, source), (Quantity.D, d, source)]

    return [OutputRecord(n, quantity, value, src) for quantity, value, src in values]


def handle_count(args) -> int:
    source = Source.from_flag(args.source)
    if source is Source.ENUMERATION:
        limit = _enumeration_limit(args.unsafe_large)
        if args.n > limit:
            return _refuse(args.n, limit)

    if args.cache:
        with CountsCache(args.cache) as cache:
            records = count_records(args.n, source, cache, args.jobs)
    else:
        records = count_records(args.n, source, None, args.jobs)

    print(FORMATTERS[args.format](records))
    return EXIT_OK


def handle_table(args) -> int:
    t = t_seq(args.max_n)
    a, b = ab_seq(args.max_n)
    d = d_rec(args.max_n)
    records = []
    for n in range(1, args.max_n + 1):
        records += [OutputRecord(n, quantity, column[n], Source.RECURRENCE)
                    for quantity, column in ((Quantity.T, t), (Quantity.A, a), (Quantity.B, b), (Quantity.D, d))]
    print(FORMATTERS[args.format](records))
    return EXIT_OK


def handle_parity(args) -> int:
    records = [OutputRecord(args.m, Quantity.EO, (count.k, count.even, count.odd), Source.RECURRENCE)
               for count in eo_row(args.m)]
    print(FORMATTERS[args.format](records))
    return EXIT_OK


def handle_verify(args) -> int:
    if args.cache:
        with CountsCache(args.cache) as cache:
            checks = run_verification(args.max_n, args.slow, cache, args.jobs)
    else:
        checks = run_verification(args.max_n, args.slow, None, args.jobs)

    print(format_report(checks))
    return EXIT_MISMATCH if any(not check.passed for check in checks) else EXIT_OK


def handle_enumerate(args) -> int:
    limit = _enumeration_limit(args.unsafe_large)
    if args.n > limit:
        return _refuse(args.n, limit)

    as_json = args.format == "json"
    print("[" if as_json else "", end="")
    for i, cnat in enumerate(iter_cnats(args.n)):
        text = serialize_grid(cnat.grid)
        if as_json:
            print(("," if i else "") + "\n  " + json.dumps(text), end="")
        else:
            print(("\n" if i else "") + text)
    if as_json:
        print("\n]")
    return EXIT_OK


def handle_render(args) -> int:
    try:
        cnat = _load_cnat(args.path)
    except ValidationError as e:
        print(f"invalid: {e}")
        return EXIT_MISMATCH
    print(render_svg(cnat) if args.svg else render_ascii(cnat))
    return EXIT_OK


def handle_decompose(args) -> int:
    try:
        d = decompose(_load_cnat(args.path))
    except (ValidationError, DecompositionError) as e:
        print(f"invalid: {e}")
        return EXIT_MISMATCH

    print(f"k={d.k} rows={_format_set(d.row_set)} cols={_format_set(d.col_set)}")
    print("top:")
    print(serialize_grid(d.top_part.grid))
    print("left:")
    print(serialize_grid(d.left_part.grid))
    return EXIT_OK


def handle_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    return args.func(args)


def main(argv: list[str] | None = None):
    logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")
    try:
        code = handle_cli(argv)
    except (OSError, ValueError) as e:
        # unreadable files, bad grid text, out-of-range sizes
        logging.error(str(e))
        code = EXIT_USAGE
    except Exception as e:
        logging.error(f"An error occurred: {e}", exc_info=True)
        code = EXIT_MISMATCH
    sys.exit(code)


if __name__ == "__main__":
    main()
