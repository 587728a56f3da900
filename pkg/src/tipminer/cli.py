"""Command-line interface: mine patterns, generate synthetic data, cross-check.

Exit codes: 0 success, 1 usage error, 2 data error, 3 miner/reference
mismatch from ``check``.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction
from pathlib import Path

from .dataio import (
    InputFormat,
    dump_intermediate,
    load_dataset,
    report_json,
    report_table,
    save_dataset,
)
from .miner import MiningConfig, mine, mine_detailed
from .model import Itemset, MiningError
from .oracle import OracleConfig, exhaustive_mine, random_dataset
from .preprocess import EmptyResultError, TargetSpec

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_MISMATCH = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; this tool reserves 2 for data errors.
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}")
    if not 0 < value <= 1:
        raise argparse.ArgumentTypeError(f"must be in (0, 1], got {text}")
    return value


def _target(text: str) -> TargetSpec:
    try:
        return TargetSpec(Itemset.of(*text.split(",")))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _format(text: str) -> InputFormat:
    try:
        return InputFormat.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _max_length(text: str) -> int:
    value = _positive(text)
    if value < 2:
        raise argparse.ArgumentTypeError("must be at least 2")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tipminer", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_mine = sub.add_parser("mine", help="mine target-oriented time-interval patterns")
    p_mine.add_argument("--input", required=True, help="dataset file")
    p_mine.add_argument("--format", type=_format, default=InputFormat.CSV,
                        help="input format: csv or jsonl (default csv)")
    p_mine.add_argument("--target", type=_target, required=True,
                        help="target itemset, items comma-joined")
    p_mine.add_argument("--min-supp", type=_fraction, required=True,
                        help="minimum support in (0, 1], e.g. 0.3 or 3/10")
    p_mine.add_argument("--max-length", type=_max_length, default=None,
                        help="optional cap on pattern length")
    p_mine.add_argument("--output", choices=["json", "table"], default="table",
                        help="report format (default table)")
    p_mine.add_argument("--dump-intermediate", metavar="DIR", default=None,
                        help="write per-stage TSV tables into DIR")

    p_gen = sub.add_parser("gen", help="generate a seeded synthetic dataset")
    p_gen.add_argument("--sequences", type=_positive, required=True)
    p_gen.add_argument("--items", type=_positive, required=True)
    p_gen.add_argument("--max-events", type=_positive, required=True)
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--out", required=True)
    p_gen.add_argument("--format", type=_format, default=InputFormat.JSONL,
                       help="output format: csv or jsonl (default jsonl)")

    p_check = sub.add_parser("check", help="compare the miner against brute force")
    p_check.add_argument("--input", required=True)
    p_check.add_argument("--format", type=_format, default=InputFormat.JSONL,
                         help="input format: csv or jsonl (default jsonl)")
    p_check.add_argument("--target", type=_target, required=True)
    p_check.add_argument("--min-supp", type=_fraction, required=True)
    p_check.add_argument("--max-length", type=_max_length, default=5,
                         help="pattern length cap for both sides (default 5)")
    return parser


def _cmd_mine(args: argparse.Namespace) -> int:
    dataset = load_dataset(args.input, args.format)
    cfg = MiningConfig(min_supp=args.min_supp, target=args.target,
                       max_length=args.max_length)
    if args.dump_intermediate is not None:
        trace = mine_detailed(dataset, cfg)
        dump_intermediate(trace, Path(args.dump_intermediate))
        results = list(trace.patterns)
    else:
        results = mine(dataset, cfg)
    render = report_json if args.output == "json" else report_table
    sys.stdout.write(render(results))
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    alphabet = [Itemset.of(f"s{i}") for i in range(1, args.items + 1)]
    dataset = random_dataset(rng, args.sequences, alphabet, 1, args.max_events)
    save_dataset(dataset, args.out, args.format)
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    dataset = load_dataset(args.input, args.format)
    oracle_cfg = OracleConfig(min_supp=args.min_supp, target=args.target,
                              max_pattern_length=args.max_length)
    mining_cfg = MiningConfig(min_supp=args.min_supp, target=args.target,
                              max_length=args.max_length)

    def outcome(run):
        try:
            return set(run())
        except EmptyResultError:
            return "empty-result"

    got = outcome(lambda: mine(dataset, mining_cfg))
    want = outcome(lambda: exhaustive_mine(dataset, oracle_cfg))
    if got != want:
        only_miner = got - want if isinstance(got, set) and isinstance(want, set) else got
        only_ref = want - got if isinstance(got, set) and isinstance(want, set) else want
        sys.stderr.write(f"mismatch: miner-only={only_miner!r} reference-only={only_ref!r}\n")
        return EXIT_MISMATCH
    size = len(got) if isinstance(got, set) else 0
    sys.stdout.write(f"ok: miner and brute force agree ({size} patterns)\n")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    commands = {"mine": _cmd_mine, "gen": _cmd_gen, "check": _cmd_check}
    try:
        return commands[args.command](args)
    except FileNotFoundError as exc:
        sys.stderr.write(f"tipminer: {exc}\n")
        return EXIT_DATA
    except MiningError as exc:
        sys.stderr.write(f"tipminer: {exc}\n")
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
