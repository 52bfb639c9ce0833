"""Command-line front end.

``compute <d> [--factored] [--breakdown]`` prints the exact invariant;
``verify [--max-degree N] [--table PATH]`` checks computed values against
the shipped reference table row by row.

Exit codes: 0 success / all rows pass, 1 verification mismatch, 2 usage
error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Dict, Optional

from .exact import FactoredFormatError, FactoredRational, format_factored
from .fixedpoints import UnsupportedDegreeError, enumerate_configurations
from .localize import configuration_contribution, multiple_cover_invariant

__all__ = ["ReferenceTable", "load_reference_table", "main"]

DEFAULT_MAX_DEGREE = 12
TABLE_DEGREES = range(2, 10)


@dataclass(frozen=True)
class ReferenceTable:
    """Known invariants by degree, as parsed factored rationals."""

    rows: Dict[int, FactoredRational]

    def value(self, d: int) -> Fraction:
        return self.rows[d].value()


def _parse_table_text(text: str, source: str) -> ReferenceTable:
    rows: Dict[int, FactoredRational] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            d_text, value_text = line.split("\t")
            d = int(d_text)
            rows[d] = FactoredRational.from_text(value_text)
        except (ValueError, FactoredFormatError) as exc:
            raise FactoredFormatError(f"{source}:{lineno}: {exc}") from exc
    return ReferenceTable(rows)


def load_reference_table(path: Optional[str] = None) -> ReferenceTable:
    """Load the reference table (the shipped one when no path is given)."""
    if path is None:
        text = (
            resources.files("multicover")
            .joinpath("data/reference_table.txt")
            .read_text(encoding="utf-8")
        )
        return _parse_table_text(text, "reference_table.txt")
    with open(path, encoding="utf-8") as handle:
        return _parse_table_text(handle.read(), path)


def _print_breakdown(d: int, out) -> Fraction:
    total = Fraction(0)
    for cfg in enumerate_configurations(d):
        report = configuration_contribution(cfg)
        out.write(f"config={cfg.describe()}\n")
        for label, value in report.per_factor_trace:
            out.write(f"factor.{label}={value.const}\n")
        out.write(f"total={report.total.coeff}\n\n")
        total += report.total.coeff
    return total


def _cmd_compute(args) -> int:
    d = args.degree
    if not 2 <= d <= args.max_degree:
        print(
            f"degree must be at least 2 and at most {args.max_degree}",
            file=sys.stderr,
        )
        return 2
    if args.breakdown:
        total = _print_breakdown(d, sys.stdout)
        value = multiple_cover_invariant(d)
        if total != value:
            raise AssertionError("breakdown records do not sum to the invariant")
        print(f"sum={format_factored(value) if args.factored else value}")
    else:
        value = multiple_cover_invariant(d)
        print(format_factored(value) if args.factored else value)
    return 0


def _cmd_verify(args) -> int:
    if not 2 <= args.max_degree <= 9:
        print("--max-degree must be between 2 and 9", file=sys.stderr)
        return 2
    try:
        table = load_reference_table(args.table)
    except (OSError, FactoredFormatError) as exc:
        print(f"cannot load table: {exc}", file=sys.stderr)
        return 2
    status = 0
    for d in range(2, args.max_degree + 1):
        if d not in table.rows:
            print(f"table has no row for d={d}", file=sys.stderr)
            return 2
        computed = multiple_cover_invariant(d)
        expected = table.value(d)
        if computed == expected:
            print(f"d={d} PASS")
        else:
            print(f"d={d} FAIL computed={computed} expected={expected}")
            status = 1
    return status


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multicover",
        description="Exact multiple-cover invariants of the local rational curve",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="compute the invariant for one degree")
    compute.add_argument("degree", type=int)
    compute.add_argument("--factored", action="store_true", help="factored output")
    compute.add_argument(
        "--breakdown", action="store_true", help="per-configuration records"
    )
    compute.add_argument(
        "--max-degree", type=int, default=DEFAULT_MAX_DEGREE, help="degree cap"
    )
    compute.set_defaults(func=_cmd_compute)

    verify = sub.add_parser("verify", help="check against the reference table")
    verify.add_argument("--max-degree", type=int, default=9)
    verify.add_argument("--table", default=None, help="alternative table file")
    verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedDegreeError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
