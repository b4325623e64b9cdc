"""FIMI-style transaction file parsing and dataset statistics.

The input format is one transaction per line, whitespace-separated item
tokens (arbitrary non-whitespace strings).  Tokens map to dense item
indices in first-occurrence order; duplicate tokens within a line and
duplicate transactions across lines are collapsed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .mining import TransactionDatabase


class DatasetError(ValueError):
    """Unusable transaction input (empty, or declared universe too small)."""


@dataclass(frozen=True)
class DatasetStats:
    num_transactions: int
    num_duplicates_removed: int
    universe_size: int
    density: Fraction

    def as_key_values(self) -> str:
        return (
            f"num_transactions={self.num_transactions}\n"
            f"num_duplicates_removed={self.num_duplicates_removed}\n"
            f"universe_size={self.universe_size}\n"
            f"density={self.density}\n"
        )

    def as_csv(self) -> str:
        header = "num_transactions,num_duplicates_removed,universe_size,density,density_exact"
        row = (
            f"{self.num_transactions},{self.num_duplicates_removed},"
            f"{self.universe_size},{format(float(self.density), '.17g')},{self.density}"
        )
        return header + "\n" + row + "\n"


def parse_transactions(
    source: Union[str, Iterable[str]],
    declared_universe: Optional[int] = None,
) -> tuple[TransactionDatabase, DatasetStats]:
    """Parse FIMI-style lines into a database plus statistics.

    Blank lines are skipped.  ``declared_universe`` overrides the observed
    distinct-item count (it must not be smaller).  Duplicate transactions are
    collapsed and counted in the stats; the resulting measure is uniform over
    the distinct transactions.
    """
    lines = source.splitlines() if isinstance(source, str) else source
    token_index: dict[str, int] = {}
    seen: dict[frozenset[int], None] = {}
    duplicates = 0
    for raw in lines:
        line = raw.strip()
        if not line:
            continue
        indices = set()
        for token in line.split():
            if token not in token_index:
                token_index[token] = len(token_index)
            indices.add(token_index[token])
        transaction = frozenset(indices)
        if transaction in seen:
            duplicates += 1
        else:
            seen[transaction] = None
    if not seen:
        raise DatasetError("no transactions: input is empty")
    observed = len(token_index)
    if declared_universe is not None:
        if declared_universe < observed:
            raise DatasetError(
                f"declared universe size {declared_universe} is smaller than "
                f"the {observed} distinct items observed"
            )
        universe_size = declared_universe
    else:
        universe_size = observed
    transactions = tuple(seen)
    db = TransactionDatabase(universe_size, transactions, labels=tuple(token_index))
    density = Fraction(sum(len(t) for t in transactions), len(transactions) * universe_size)
    stats = DatasetStats(
        num_transactions=len(transactions),
        num_duplicates_removed=duplicates,
        universe_size=universe_size,
        density=density,
    )
    return db, stats


def to_fimi(db: TransactionDatabase) -> str:
    """Serialize one transaction per line using the database's item labels.

    Items are written in ascending index order.  Empty transactions are not
    representable in the line format (blank lines are skipped on parse).
    """
    lines = (" ".join(db.label(i) for i in sorted(t)) for t in db.transactions)
    return "\n".join(lines) + "\n"
