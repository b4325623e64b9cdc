"""Command-line frontend: stats, dimension reports, sweeps, curves, generators.

Exit codes: 0 success, 2 input error (IO/parse), 3 usage error (bad flags or
thresholds).  Data files are written atomically (temp file plus rename) so a
failure never leaves partial output behind.  Reports print rationals as
``p/q``; CSV numeric columns carry decimals with 17 significant digits, with
exact ``p/q`` values in trailing ``*_exact`` columns.
"""

from __future__ import annotations

import argparse
import math
import os
import re
import sys
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from pathlib import Path
from typing import Optional, Sequence, Union

from .geometry import AlphaGrid, Scalar, intrinsic_dimension_grid
from .ingest import DatasetError, parse_transactions, to_fimi
from .mining import (
    FrequentItemsets,
    TransactionDatabase,
    evaluate_rule_thresholds,
    mine_frequent_itemsets,
)
from .synthetic import HypercubeSpec, hamming_cube_structure, random_transaction_db

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_USAGE = 3

SWEEP_HEADER = "dataset,min_support,min_confidence,num_rules,integral,dimension,integral_exact"
CURVE_HEADER = "alpha,obs_diam,alpha_exact,obs_diam_exact"

THREADS_ENV_VAR = "INTRINSIC_DIM_THREADS"


class UsageError(ValueError):
    """Bad flag values; mapped to exit code 3."""


def _format_report(x: Scalar) -> str:
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, Rational):
        return str(Fraction(x))
    return repr(x)


def _format_csv_number(x: Scalar) -> str:
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return format(float(x), ".17g")


def _format_csv_exact(x: Scalar) -> str:
    if isinstance(x, Rational):
        return str(Fraction(x))
    return ""


def _parse_fraction(text: str, name: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid {name}: {text!r}") from exc


def _parse_threshold(text: str, name: str) -> Fraction:
    value = _parse_fraction(text, name)
    if not 0 < value <= 1:
        raise UsageError(f"{name} must lie in (0, 1], got {text}")
    return value


def _parse_threshold_list(text: str, name: str) -> list[Fraction]:
    items = [piece for piece in (p.strip() for p in text.split(",")) if piece]
    if not items:
        raise UsageError(f"{name} must list at least one value")
    return [_parse_threshold(piece, name) for piece in items]


def _dataset_name(path: Union[str, Path]) -> str:
    return re.sub(r"[,\r\n]", "_", Path(path).stem)


def _atomic_write(path: Union[str, Path], text: str) -> None:
    target = Path(path)
    fd, tmp_name = tempfile.mkstemp(dir=str(target.parent), prefix=target.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp_name, target)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise


def _threads_from_env() -> int:
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None:
        return 1
    try:
        threads = int(raw)
    except ValueError:
        print(f"warning: ignoring non-integer {THREADS_ENV_VAR}={raw!r}", file=sys.stderr)
        return 1
    return max(threads, 1)


@dataclass(frozen=True)
class SweepRow:
    """One sweep cell: thresholds plus rule count, integral and dimension."""

    dataset: str
    min_support: Fraction
    min_confidence: Fraction
    num_rules: int
    integral: Fraction
    dimension: Union[Fraction, float]


def run_sweep(
    db: TransactionDatabase,
    dataset: str,
    supports: Sequence[Fraction],
    confidences: Sequence[Fraction],
    *,
    max_itemset_size: Optional[int] = None,
    threads: int = 1,
) -> list[SweepRow]:
    """Evaluate every (support, confidence) cell, sorted by (confidence, support).

    Frequent itemsets are mined once per distinct support and shared across
    confidence levels.  Cells are pure and may be evaluated in parallel; the
    output order and values are independent of ``threads``.
    """
    if not supports or not confidences:
        raise ValueError("supports and confidences must be non-empty")
    cells = sorted((c, s) for s in set(supports) for c in set(confidences))
    frequents: dict[Fraction, FrequentItemsets] = {
        s: mine_frequent_itemsets(db, s, max_itemset_size) for s in set(supports)
    }

    def evaluate(cell: tuple[Fraction, Fraction]) -> SweepRow:
        confidence, support = cell
        result = evaluate_rule_thresholds(db, frequents[support], confidence)
        return SweepRow(
            dataset=dataset,
            min_support=support,
            min_confidence=confidence,
            num_rules=result.num_rules,
            integral=result.integral,
            dimension=result.dimension,
        )

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(evaluate, cells))
    return [evaluate(cell) for cell in cells]


def sweep_rows_to_csv(rows: Sequence[SweepRow]) -> str:
    lines = [SWEEP_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                (
                    row.dataset,
                    _format_csv_number(row.min_support),
                    _format_csv_number(row.min_confidence),
                    str(row.num_rules),
                    _format_csv_number(row.integral),
                    _format_csv_number(row.dimension),
                    _format_csv_exact(row.integral),
                )
            )
        )
    return "\n".join(lines) + "\n"


def _curve_samples(
    steps: Sequence[tuple[Fraction, Fraction]],
) -> list[tuple[Fraction, Fraction]]:
    """Sample the step function at its breakpoints, their midpoints, and 1."""
    boundaries = sorted({alpha for alpha, _ in steps} | {Fraction(1)})
    samples = set(boundaries)
    for a, b in zip(boundaries, boundaries[1:]):
        samples.add((a + b) / 2)
    thresholds = [alpha for alpha, _ in steps]
    values = [value for _, value in steps]
    out = []
    ptr = 0
    for x in sorted(samples):
        while ptr + 1 < len(thresholds) and thresholds[ptr + 1] <= x:
            ptr += 1
        out.append((x, values[ptr]))
    return out


def _load_db(path: str, declared_universe: Optional[int]) -> TransactionDatabase:
    with open(path, encoding="utf-8") as handle:
        db, _ = parse_transactions(handle, declared_universe=declared_universe)
    return db


def _cmd_stats(args: argparse.Namespace) -> int:
    with open(args.path, encoding="utf-8") as handle:
        _, stats = parse_transactions(handle, declared_universe=args.universe)
    sys.stdout.write(stats.as_csv() if args.csv else stats.as_key_values())
    return EXIT_OK


def _cmd_dim(args: argparse.Namespace) -> int:
    support = _parse_threshold(args.min_support, "min-support")
    confidence = _parse_threshold(args.min_confidence, "min-confidence")
    db = _load_db(args.path, args.universe)
    frequents = mine_frequent_itemsets(db, support, args.max_size)
    result = evaluate_rule_thresholds(db, frequents, confidence)
    print(
        f"rules={result.num_rules} "
        f"integral={_format_report(result.integral)} "
        f"dimension={_format_report(result.dimension)}"
    )
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    supports = _parse_threshold_list(args.supports, "supports")
    confidences = _parse_threshold_list(args.confidences, "confidences")
    db = _load_db(args.path, args.universe)
    rows = run_sweep(
        db,
        _dataset_name(args.path),
        supports,
        confidences,
        max_itemset_size=args.max_size,
        threads=_threads_from_env(),
    )
    _atomic_write(args.out, sweep_rows_to_csv(rows))
    return EXIT_OK


def _cmd_obsdiam_curve(args: argparse.Namespace) -> int:
    support = _parse_threshold(args.min_support, "min-support")
    confidence = _parse_threshold(args.min_confidence, "min-confidence")
    if args.resolution is not None and args.resolution < 2:
        raise UsageError("resolution must be at least 2")
    db = _load_db(args.path, args.universe)
    frequents = mine_frequent_itemsets(db, support, args.max_size)
    result = evaluate_rule_thresholds(db, frequents, confidence)
    samples = _curve_samples(result.step_function)
    if args.resolution:
        extra = {Fraction(k, args.resolution) for k in range(args.resolution + 1)}
        merged = sorted({alpha for alpha, _ in samples} | extra)
        thresholds = [alpha for alpha, _ in result.step_function]
        values = [value for _, value in result.step_function]
        samples = []
        ptr = 0
        for x in merged:
            while ptr + 1 < len(thresholds) and thresholds[ptr + 1] <= x:
                ptr += 1
            samples.append((x, values[ptr]))
    lines = [CURVE_HEADER]
    for alpha, value in samples:
        lines.append(
            f"{_format_csv_number(alpha)},{_format_csv_number(value)},{alpha},{value}"
        )
    text = "\n".join(lines) + "\n"
    if args.out:
        _atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_synth(args: argparse.Namespace) -> int:
    if args.cube is not None:
        if args.cube < 1:
            raise UsageError("--cube requires a positive dimension")
        structure = hamming_cube_structure(HypercubeSpec(args.cube))
        result = intrinsic_dimension_grid(structure, AlphaGrid())
        print(
            f"n={args.cube} "
            f"integral={_format_report(result.integral)} "
            f"dimension={_format_report(result.dimension)} "
            f"dimension_decimal={_format_csv_number(result.dimension)}"
        )
        return EXIT_OK
    pieces = args.random.split(",")
    if len(pieces) != 4:
        raise UsageError("--random expects seed,n_items,n_transactions,item_probability")
    try:
        seed, n_items, n_transactions = (int(p) for p in pieces[:3])
        probability = float(pieces[3])
    except ValueError as exc:
        raise UsageError(f"invalid --random spec: {args.random!r}") from exc
    try:
        db = random_transaction_db(seed, n_items, n_transactions, probability)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    text = to_fimi(db)
    if args.out:
        _atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: D102 - argparse hook
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="intrinsic-dim",
        description="Intrinsic dimension of association-rule feature families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    stats = sub.add_parser("stats", help="dataset statistics")
    stats.add_argument("path")
    stats.add_argument("--universe", type=int, default=None)
    stats.add_argument("--csv", action="store_true", help="emit CSV instead of key=value")
    stats.set_defaults(func=_cmd_stats)

    dim = sub.add_parser("dim", help="rule count, integral and dimension at one setting")
    dim.add_argument("path")
    dim.add_argument("--min-support", required=True)
    dim.add_argument("--min-confidence", required=True)
    dim.add_argument("--universe", type=int, default=None)
    dim.add_argument("--max-size", type=int, default=None)
    dim.set_defaults(func=_cmd_dim)

    sweep = sub.add_parser("sweep", help="threshold sweep emitted as CSV")
    sweep.add_argument("path")
    sweep.add_argument("--supports", required=True, help="comma-separated, e.g. 1/3,0.5")
    sweep.add_argument("--confidences", required=True, help="comma-separated, e.g. 0.8,1")
    sweep.add_argument("--out", required=True)
    sweep.add_argument("--universe", type=int, default=None)
    sweep.add_argument("--max-size", type=int, default=None)
    sweep.set_defaults(func=_cmd_sweep)

    curve = sub.add_parser("obsdiam-curve", help="exact observable-diameter step function")
    curve.add_argument("path")
    curve.add_argument("--min-support", required=True)
    curve.add_argument("--min-confidence", required=True)
    curve.add_argument("--universe", type=int, default=None)
    curve.add_argument("--max-size", type=int, default=None)
    curve.add_argument(
        "--resolution",
        type=int,
        default=None,
        help="additionally sample k/resolution grid points",
    )
    curve.add_argument("--out", default=None)
    curve.set_defaults(func=_cmd_obsdiam_curve)

    synth = sub.add_parser("synth", help="synthetic structures and databases")
    kind = synth.add_mutually_exclusive_group(required=True)
    kind.add_argument("--cube", type=int, default=None, metavar="N")
    kind.add_argument("--random", default=None, metavar="SEED,ITEMS,TRANS,P")
    synth.add_argument("--out", default=None)
    synth.set_defaults(func=_cmd_synth)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DatasetError, OSError, UnicodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
