"""Command line front end.

    bmc encode  INPUT -o OUT [--n N] [--flags 1|2] [--iterations R] [--split]
    bmc decode  INPUT -o OUT [--split]
    bmc analyze [INPUT] [--n N] [--flags 1|2] [--iterations R]
    bmc table   [--n N] [--printed-formula]
    bmc enum    --n N --k K

``-`` stands for stdin/stdout.  Exit status: 0 success, 1 bad data,
2 usage error, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from .bits import bits_to_bytes, bytes_to_bits
from .container import merge_channels, read_container, split_channels, write_container
from .core import BinomialParams, enumerate_alphabet
from .errors import BinomialError
from .metrics import coeff_binomial, coeff_binomial_printed, coeff_mv2
from .transform import TransformParams, channel_stats, decode_stream, encode_stream

log = logging.getLogger("binomial_mc")

EXIT_OK = 0
EXIT_DATA = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write_output(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _params(args) -> TransformParams:
    return TransformParams(args.n, args.flags, args.iterations)


def cmd_encode(args) -> int:
    data = _read_input(args.input)
    channels = encode_stream(bytes_to_bits(data), _params(args))
    if args.split:
        if args.output == "-":
            raise UsageError("--split needs a file basename for -o")
        for path in split_channels(channels, args.output):
            log.info("wrote %s", path)
    elif args.output == "-":
        write_container(channels, sys.stdout.buffer)
    else:
        size = write_container(channels, args.output)
        log.info("wrote %s (%d bytes from %d)", args.output, size, len(data))
    return EXIT_OK


def cmd_decode(args) -> int:
    if args.split:
        channels = merge_channels(args.input)
    else:
        channels = read_container(_read_input(args.input))
    bits = decode_stream(channels)
    if len(bits) % 8:
        raise BinomialError(f"decoded {len(bits)} bits, not a whole number of bytes")
    _write_output(args.output, bits_to_bytes(bits))
    return EXIT_OK


def _ratio_cell(ratio) -> str:
    return "-" if ratio is None else f"{float(ratio):.6f}\t{ratio.numerator}/{ratio.denominator}"


def cmd_table(args) -> int:
    head = ["N", "k_bin", "k_mv2"]
    if args.printed_formula:
        head.append("k_bin_printed")
    print("\t".join(head))
    for n in range(2, args.n + 1):
        row = [str(n), str(coeff_binomial(n)), str(coeff_mv2(n))]
        if args.printed_formula:
            row.append(str(coeff_binomial_printed(n)))
        print("\t".join(row))
    return EXIT_OK


def cmd_analyze(args) -> int:
    cmd_table(argparse.Namespace(n=args.n, printed_formula=False))
    if args.input is None:
        return EXIT_OK
    data = _read_input(args.input)
    stats = channel_stats(encode_stream(bytes_to_bits(data), _params(args)))
    print()
    print(f"input_bits\t{stats.original_bits}")
    print(f"core_bits\t{stats.core_bits}")
    print(f"flag_bits\t{stats.flag_bits}")
    print(f"core_ratio\t{_ratio_cell(stats.core_ratio)}")
    print(f"total_ratio\t{_ratio_cell(stats.total_ratio)}")
    for r in stats.rounds:
        print(f"round\t{r.round}\tinput={r.input_bits}\tblocks={r.block_count}"
              f"\tcore={r.core_bits}\tflag1={r.flag1_bits}\tflag2={r.flag2_bits}")
    return EXIT_OK


def cmd_enum(args) -> int:
    sys.stdout.write(enumerate_alphabet(BinomialParams(args.n, args.k)).dump())
    return EXIT_OK


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bmc", description="Binomial multichannel recoder.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def transform_opts(p):
        p.add_argument("--n", type=int, default=8, help="block size in bits (default 8)")
        p.add_argument("--flags", type=int, choices=(1, 2), default=1,
                       help="1: weight flag only, 2: add the complement flag")
        p.add_argument("--iterations", type=int, default=1)

    p = sub.add_parser("encode", help="file -> container")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--split", action="store_true", help="one file per channel")
    transform_opts(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="container -> file")
    p.add_argument("input", help="container, or basename with --split")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--split", action="store_true")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("analyze", help="coefficient table plus ratios for a file")
    p.add_argument("input", nargs="?")
    transform_opts(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("table", help="coefficient table for N = 2..n")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--printed-formula", action="store_true",
                   help="add the literal printed binomial formula as a column")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enum", help="list the codes of one alphabet")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_enum)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if args.command in ("table", "analyze") and args.n < 2:
        parser.error("--n must be at least 2")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"bmc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BinomialError as exc:
        print(f"bmc: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"bmc: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
