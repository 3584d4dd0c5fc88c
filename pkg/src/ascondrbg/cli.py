"""Command-line interface: generate random bytes, run the known-answer
suites, and benchmark the mechanisms.

  ascon-drbg generate --mechanism ascon-ctr --bytes 32 [--seed-hex ...]
  ascon-drbg kat [--suite all|ascon|drbg]
  ascon-drbg bench [--mechanism NAME ...] [--iterations N] [--out report.csv]

generate with --seed-hex replays a deterministic entropy script, so the
output is reproducible bit-for-bit; without it the OS entropy source is
used. bench with --out writes the delimited report to the given path and a
rendered figure next to it (same name, .png).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from . import bench, kat, mechanisms
from .bitstring import BitString
from .framework import (
    MAX_BITS_PER_REQUEST,
    DrbgError,
    OsEntropySource,
    ScriptedEntropySource,
)


def _hex_bytes(text: str, label: str) -> bytes:
    try:
        return bytes.fromhex(text)
    except ValueError:
        raise ValueError(f"malformed hex for {label}: {text!r}") from None


def cmd_generate(args: argparse.Namespace) -> int:
    if args.bytes <= 0:
        raise ValueError("--bytes must be positive")
    if args.seed_hex is not None:
        entropy = ScriptedEntropySource(_hex_bytes(args.seed_hex, "--seed-hex"))
    else:
        entropy = OsEntropySource()
    add_input = None
    if args.add_input_hex is not None:
        add_input = BitString.from_bytes(_hex_bytes(args.add_input_hex, "--add-input-hex"))

    mech = mechanisms.create(args.mechanism, entropy)
    out = bytearray()
    remaining = args.bytes * 8
    while remaining:
        n = min(remaining, MAX_BITS_PER_REQUEST)
        out += mech.generate(n, add_input).to_bytes()
        remaining -= n

    if args.format == "raw":
        stream = open(args.out, "wb") if args.out else sys.stdout.buffer
        try:
            stream.write(bytes(out))
        finally:
            if args.out:
                stream.close()
    else:
        text = bytes(out).hex() + "\n"
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
    return 0


def cmd_kat(args: argparse.Namespace) -> int:
    report = kat.run_suite(args.suite)
    for failure in report.failures():
        print(f"FAIL {failure.suite} {failure.ident}: {failure.detail}",
              file=sys.stderr)
    print(f"{report.passed} passed, {report.failed} failed "
          f"({len(report.results)} vectors, suite={args.suite})")
    return 0 if report.ok else 1


def cmd_bench(args: argparse.Namespace) -> int:
    names = args.mechanism or list(mechanisms.MECHANISMS)
    report = bench.run_bench(names, iterations=args.iterations,
                             bits_per_call=args.bits_per_call)
    text = bench.format_report(report, args.format)
    if args.out:
        Path(args.out).write_text(text)
        figure_path = str(Path(args.out).with_suffix(".png"))
        bench.render_figure(report, figure_path)
        print(f"report written to {args.out}, figure to {figure_path}")
    else:
        sys.stdout.write(text)
    sys.stdout.write("\n" + bench.reference_context())
    for row in report.rows:
        if row.error:
            print(f"row failed: {row.mechanism}: {row.error}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ascon-drbg",
        description="Deterministic random bit generators driven by Ascon "
                    "primitives, with SHA-256/AES-128 baselines.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="generate random bytes")
    p_gen.add_argument("--mechanism", required=True,
                       choices=sorted(mechanisms.MECHANISMS))
    p_gen.add_argument("--bytes", type=int, required=True,
                       help="number of output bytes")
    p_gen.add_argument("--seed-hex", help="deterministic entropy script (hex)")
    p_gen.add_argument("--add-input-hex",
                       help="additional input passed to every generate call (hex)")
    p_gen.add_argument("--format", choices=("hex", "raw"), default="hex")
    p_gen.add_argument("--out", help="output file (default: stdout)")
    p_gen.set_defaults(func=cmd_generate)

    p_kat = sub.add_parser("kat", help="run the known-answer suites")
    p_kat.add_argument("--suite", choices=("all", "ascon", "drbg"), default="all")
    p_kat.set_defaults(func=cmd_kat)

    p_bench = sub.add_parser("bench", help="benchmark mechanisms")
    p_bench.add_argument("--mechanism", action="append",
                         choices=sorted(mechanisms.MECHANISMS),
                         help="mechanism to run (repeatable; default: all)")
    p_bench.add_argument("--iterations", type=int, default=bench.DEFAULT_ITERATIONS)
    p_bench.add_argument("--bits-per-call", type=int, default=bench.DEFAULT_BITS_PER_CALL)
    p_bench.add_argument("--format", choices=("csv", "markdown"), default="markdown")
    p_bench.add_argument("--out", help="write the report here and a .png figure alongside")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, DrbgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
