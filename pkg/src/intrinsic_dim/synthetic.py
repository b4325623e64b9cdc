"""Synthetic generators: a concentrating hypercube family and random databases.

The hypercube family witnesses concentration of measure: its single
normalized coordinate-sum feature spreads binomial mass on {0, 1/n, ..., 1},
whose width shrinks like 1/sqrt(n), so the intrinsic dimension diverges as
n grows.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .geometry import EmpiricalDataStructure
from .mining import TransactionDatabase

#: Largest cube dimension for which weights stay exact rationals; beyond it
#: binomial weights are computed in floating point and renormalized.
EXACT_WEIGHT_LIMIT = 30


@dataclass(frozen=True)
class HypercubeSpec:
    """Dimension of the binary cube whose coordinate mean is the feature."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("cube dimension must be at least 1")


def hamming_cube_structure(spec: HypercubeSpec) -> EmpiricalDataStructure:
    """Push-forward of the uniform cube measure under the coordinate mean.

    Points are k/n for k = 0..n with weights C(n, k) / 2**n, and the single
    feature row is the identity on those points.  Exact rationals up to
    n = EXACT_WEIGHT_LIMIT, renormalized floats beyond.
    """
    n = spec.n
    if n <= EXACT_WEIGHT_LIMIT:
        values = tuple(Fraction(k, n) for k in range(n + 1))
        weights = tuple(Fraction(comb(n, k), 2**n) for k in range(n + 1))
    else:
        values = tuple(k / n for k in range(n + 1))
        raw = [comb(n, k) / 2.0**n for k in range(n + 1)]
        total = sum(raw)
        weights = tuple(w / total for w in raw)
    return EmpiricalDataStructure(weights, (values,))


def random_transaction_db(
    seed: int,
    n_items: int,
    n_transactions: int,
    item_probability: float,
) -> TransactionDatabase:
    """Seeded random database: each item joins each transaction independently.

    Empty draws are redrawn; duplicate transactions collapse, so the result
    may hold fewer than ``n_transactions`` rows.  The generator is pinned to
    CPython's Mersenne Twister (`random.Random(seed).random()`), drawing
    items in ascending index order, one transaction after another, which
    makes results reproducible across runs and platforms.
    """
    if n_items < 1:
        raise ValueError("n_items must be at least 1")
    if n_transactions < 1:
        raise ValueError("n_transactions must be at least 1")
    if not 0 < item_probability < 1:
        raise ValueError("item_probability must lie strictly between 0 and 1")
    rng = random.Random(seed)
    drawn: dict[frozenset[int], None] = {}
    for _ in range(n_transactions):
        while True:
            transaction = frozenset(
                i for i in range(n_items) if rng.random() < item_probability
            )
            if transaction:
                break
        drawn.setdefault(transaction, None)
    return TransactionDatabase(n_items, tuple(drawn))
