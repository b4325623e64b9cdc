#!/usr/bin/env python3
"""Sweep support/confidence thresholds on a seeded random database.

Raising either threshold shrinks the rule family, which can only shrink
observable diameters, which can only raise the dimension: every column
below is non-decreasing top to bottom.  The CSV written at the end is the
input format for the chart frontend (frontend/ in this repository).
"""

from fractions import Fraction
from pathlib import Path

from intrinsic_dim import random_transaction_db
from intrinsic_dim.cli import run_sweep, sweep_rows_to_csv

F = Fraction

db = random_transaction_db(seed=5, n_items=12, n_transactions=60, item_probability=0.4)
print(f"database: {db.num_transactions} transactions over {db.universe_size} items\n")

supports = [F(1, 10), F(1, 5), F(3, 10), F(2, 5)]
confidences = [F(3, 5), F(4, 5), F(1)]
rows = run_sweep(db, "random-demo", supports, confidences)

print(f"{'support':>9} | " + " | ".join(f"conf {c}" for c in confidences))
for support in supports:
    cells = []
    for confidence in confidences:
        row = next(
            r for r in rows if r.min_support == support and r.min_confidence == confidence
        )
        dim = "inf" if row.dimension == float("inf") else f"{float(row.dimension):9.2f}"
        cells.append(f"{dim} ({row.num_rules} rules)")
    print(f"{str(support):>9} | " + " | ".join(cells))

out = Path("sweep_demo.csv")
out.write_text(sweep_rows_to_csv(rows), encoding="utf-8")
print(f"\nwrote {out} - render it with the chart frontend:")
print("  cd frontend && npm run render -- ../sweep_demo.csv --out-dir charts")
