"""Performance guard on a dense synthetic database.

Not an acceptance criterion: keeps the miner and the streaming rule
evaluator honest at five-digit itemset and rule counts without needing the
benchmark files.
"""

import time
from fractions import Fraction

from intrinsic_dim import mine_frequent_itemsets, random_transaction_db
from intrinsic_dim.cli import run_sweep

F = Fraction


def test_dense_database_sweep_is_fast():
    db = random_transaction_db(11, 20, 400, 0.8)
    start = time.perf_counter()
    frequents = mine_frequent_itemsets(db, F(1, 4))
    rows = run_sweep(db, "dense", [F(1, 4), F(2, 5)], [F(4, 5), F(1)])
    elapsed = time.perf_counter() - start
    assert len(frequents) > 10_000
    assert max(row.num_rules for row in rows) > 50_000
    assert elapsed < 60.0, f"dense sweep took {elapsed:.1f}s"
    by_confidence = {}
    for row in rows:
        by_confidence.setdefault(row.min_confidence, []).append(
            (row.min_support, row.dimension)
        )
    for cells in by_confidence.values():
        cells.sort()
        dims = [d for _, d in cells]
        assert all(b >= a for a, b in zip(dims, dims[1:]))
