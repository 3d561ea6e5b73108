#!/usr/bin/env python3
"""Run the three worked grade/evidence decision tables end to end.

Prints min-aggregated profiles, hybrid scores at a few weights, the full
lambda sweep, break-even points, and the one-coordinate projection rankings
for the laptop, supplier, and proposal tables shipped in data/.
"""

from __future__ import annotations

import pathlib
import sys
from fractions import Fraction

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from svset.decision import (
    DecisionTable,
    aggregate_min,
    break_even,
    lambda_sweep,
    projection_rankings,
    rank,
)
from svset.rationals import format_rational

DATA = pathlib.Path(__file__).resolve().parents[1] / "data"

CASES = [
    ("laptops", DATA / "laptops.csv", 10, [Fraction(7, 10)], None),
    ("suppliers", DATA / "suppliers.csv", 5, [Fraction(7, 10), Fraction(2, 5)], ("S3", "S4")),
    ("proposals", DATA / "proposals.csv", 5, [Fraction(1, 2), Fraction(9, 10)], ("P2", "P3")),
]


def show(name: str, path: pathlib.Path, k: int, lambdas, pair) -> None:
    table = DecisionTable.from_csv(str(path), k)
    print(f"== {name} (k = {k}) ==")
    profile = aggregate_min(table)
    for u in table.alternatives:
        print(f"  B({u}) = {profile[u]}")
    for lam in lambdas:
        result = rank(table, lam)
        scores = ", ".join(
            f"{u}={format_rational(result.scores[u])}" for u in table.alternatives
        )
        print(f"  lambda={format_rational(lam)}: {scores}")
        print(f"    ranking: {result.format_order()}")
    if pair:
        report = break_even(profile[pair[0]], profile[pair[1]], pair)
        print(f"  break-even {pair[0]} vs {pair[1]}: {report.summary()}")
    print("  sweep:")
    for line in lambda_sweep(table).summary().splitlines():
        print(f"    {line}")
    print("  projections:")
    for line in projection_rankings(table).summary().splitlines():
        print(f"    {line}")
    print()


def main() -> None:
    for case in CASES:
        show(*case)


if __name__ == "__main__":
    main()
