"""Association-rule mining and the closed-form dimension of rule families.

A rule (body, head) over a transaction database contributes one feature to
the induced data structure: the head measure ``|head| / universe_size`` on
transactions containing the body, 0 elsewhere.  For such two-valued
features the observable diameter has a closed form: a rule with body
support ``s`` contributes its head measure exactly on
``alpha < min(s, 1 - s)``, so the diameter curve is a step function over
the breakpoints ``min(s, 1 - s)`` and integrates exactly in rational
arithmetic.

Supports, confidences and head measures are exact :class:`fractions.Fraction`
values throughout; thresholds are compared in integer arithmetic internally.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Union

from .geometry import EmpiricalDataStructure, Scalar

FrequentItemsets = list[tuple[frozenset[int], Fraction]]


@dataclass(frozen=True)
class TransactionDatabase:
    """Itemset universe of size ``universe_size`` plus distinct transactions.

    Transactions are sets of item indices in ``range(universe_size)``.
    ``labels`` optionally names the items that actually occur (index order);
    unlabeled items stringify as their index.
    """

    universe_size: int
    transactions: tuple[frozenset[int], ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "transactions", tuple(frozenset(t) for t in self.transactions))
        if self.universe_size < 1:
            raise ValueError("universe size must be at least 1")
        for t in self.transactions:
            for i in t:
                if not 0 <= i < self.universe_size:
                    raise ValueError(f"item index {i} outside universe of size {self.universe_size}")
        if len(set(self.transactions)) != len(self.transactions):
            raise ValueError("transactions must be pairwise distinct as sets")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) > self.universe_size:
                raise ValueError("more labels than universe items")
            if len(set(self.labels)) != len(self.labels):
                raise ValueError("item labels must be distinct")

    @property
    def num_transactions(self) -> int:
        return len(self.transactions)

    @property
    def items(self) -> tuple[int, ...]:
        return tuple(range(self.universe_size))

    def label(self, item: int) -> str:
        if self.labels is not None and item < len(self.labels):
            return self.labels[item]
        return str(item)

    def as_token_sets(self) -> frozenset[frozenset[str]]:
        """Label-level view of the transactions (for relabeling-insensitive comparison)."""
        return frozenset(frozenset(self.label(i) for i in t) for t in self.transactions)

    def relabel_items(self, mapping: Sequence[int]) -> "TransactionDatabase":
        """Apply a bijection on item indices; drops the label table."""
        perm = tuple(mapping)
        if sorted(perm) != list(range(self.universe_size)):
            raise ValueError("mapping must be a bijection on the item universe")
        moved = tuple(frozenset(perm[i] for i in t) for t in self.transactions)
        return TransactionDatabase(self.universe_size, moved)

    def reorder_transactions(self, permutation: Sequence[int]) -> "TransactionDatabase":
        perm = tuple(permutation)
        if sorted(perm) != list(range(self.num_transactions)):
            raise ValueError("permutation must be a bijection on transaction indices")
        return TransactionDatabase(
            self.universe_size, tuple(self.transactions[p] for p in perm), self.labels
        )


@dataclass(frozen=True)
class MiningParams:
    """Support/confidence thresholds plus an optional itemset size cap."""

    min_support: Fraction
    min_confidence: Fraction
    max_itemset_size: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "min_support", Fraction(self.min_support))
        object.__setattr__(self, "min_confidence", Fraction(self.min_confidence))
        if not 0 < self.min_support <= 1:
            raise ValueError(f"min_support must lie in (0, 1], got {self.min_support}")
        if not 0 < self.min_confidence <= 1:
            raise ValueError(f"min_confidence must lie in (0, 1], got {self.min_confidence}")
        if self.max_itemset_size is not None and self.max_itemset_size < 1:
            raise ValueError("max_itemset_size must be positive")


@dataclass(frozen=True, slots=True)
class AssociationRule:
    """Rule (body, head): disjoint itemsets, head non-empty.

    Counts are absolute; supports, confidence and head measure derive from
    them as exact rationals.
    """

    body: frozenset[int]
    head: frozenset[int]
    body_count: int
    joint_count: int
    num_transactions: int
    universe_size: int

    def __post_init__(self) -> None:
        if not self.head:
            raise ValueError("rule head must be non-empty")
        if self.body & self.head:
            raise ValueError("rule body and head must be disjoint")
        if not 0 < self.joint_count <= self.body_count <= self.num_transactions:
            raise ValueError("rule counts must satisfy 0 < joint <= body <= |T|")
        for i in self.body | self.head:
            if not 0 <= i < self.universe_size:
                raise ValueError(f"item index {i} outside universe of size {self.universe_size}")

    @property
    def body_support(self) -> Fraction:
        return Fraction(self.body_count, self.num_transactions)

    @property
    def joint_support(self) -> Fraction:
        return Fraction(self.joint_count, self.num_transactions)

    @property
    def confidence(self) -> Fraction:
        return Fraction(self.joint_count, self.body_count)

    @property
    def head_measure(self) -> Fraction:
        return Fraction(len(self.head), self.universe_size)

    @property
    def breakpoint(self) -> Fraction:
        """``min(s, 1 - s)``: the alpha below which this rule's feature spreads."""
        s = self.body_support
        return min(s, 1 - s)

    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (tuple(sorted(self.body)), tuple(sorted(self.head)))


@dataclass(frozen=True)
class RuleSet:
    """Rules in canonical (body, head) order plus originating database sizes."""

    rules: tuple[AssociationRule, ...]
    num_transactions: int
    universe_size: int
    params: MiningParams

    def __post_init__(self) -> None:
        object.__setattr__(self, "rules", tuple(self.rules))
        keys = [r.sort_key() for r in self.rules]
        if any(b <= a for a, b in zip(keys, keys[1:])):
            raise ValueError("rules must be sorted by (body, head) without duplicates")
        for r in self.rules:
            if r.num_transactions != self.num_transactions or r.universe_size != self.universe_size:
                raise ValueError("rule database sizes disagree with the rule set")

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self) -> Iterator[AssociationRule]:
        return iter(self.rules)

    def to_csv(self) -> str:
        """Serialize as ``body;head;body_support;joint_support;confidence;head_measure``.

        Itemsets are space-separated canonical indices, rationals are in
        lowest terms (``p/q``, integers without denominator).
        """
        lines = ["body;head;body_support;joint_support;confidence;head_measure"]
        for r in self.rules:
            lines.append(
                ";".join(
                    (
                        " ".join(str(i) for i in sorted(r.body)),
                        " ".join(str(i) for i in sorted(r.head)),
                        str(r.body_support),
                        str(r.joint_support),
                        str(r.confidence),
                        str(r.head_measure),
                    )
                )
            )
        return "\n".join(lines) + "\n"


def _item_tid_masks(db: TransactionDatabase) -> list[int]:
    masks = [0] * db.universe_size
    for tid, t in enumerate(db.transactions):
        bit = 1 << tid
        for i in t:
            masks[i] |= bit
    return masks


def mine_frequent_itemsets(
    db: TransactionDatabase,
    min_support: Union[Fraction, int, str],
    max_size: Optional[int] = None,
) -> FrequentItemsets:
    """All non-empty itemsets with support >= ``min_support`` and exact supports.

    Depth-first tidset-intersection enumeration (prefix growth over items in
    ascending index order); each itemset's transaction set is carried as a
    bitmask so support counting is a popcount.  Output is sorted by the
    itemsets' canonical index tuples.
    """
    m = db.num_transactions
    if m == 0:
        raise ValueError("empty database: nothing to mine")
    support = Fraction(min_support)
    if not 0 < support <= 1:
        raise ValueError(f"min_support must lie in (0, 1], got {support}")
    if max_size is not None and max_size < 1:
        raise ValueError("max_size must be positive")
    min_count = math.ceil(support * m)

    item_masks = _item_tid_masks(db)
    first: list[tuple[int, int, int]] = []
    for i in range(db.universe_size):
        count = item_masks[i].bit_count()
        if count >= min_count:
            first.append((i, item_masks[i], count))

    results: list[tuple[tuple[int, ...], int]] = []

    def grow(prefix: tuple[int, ...], candidates: list[tuple[int, int, int]]) -> None:
        for idx, (item, mask, count) in enumerate(candidates):
            items = prefix + (item,)
            results.append((items, count))
            if max_size is not None and len(items) >= max_size:
                continue
            children: list[tuple[int, int, int]] = []
            for other, other_mask, _ in candidates[idx + 1 :]:
                inter = mask & other_mask
                inter_count = inter.bit_count()
                if inter_count >= min_count:
                    children.append((other, inter, inter_count))
            if children:
                grow(items, children)

    grow((), first)
    results.sort()
    return [(frozenset(items), Fraction(count, m)) for items, count in results]


def _frequent_count_table(db: TransactionDatabase, frequents: FrequentItemsets) -> dict[int, int]:
    """Bitmask -> absolute count, validating the frequents/database pairing.

    Requires the collection to be subset-closed (which any support-threshold
    mining output is); rule derivation looks up every body inside it.
    """
    m = db.num_transactions
    table: dict[int, int] = {}
    for itemset, support in frequents:
        mask = 0
        for i in itemset:
            if not 0 <= i < db.universe_size:
                raise ValueError(f"frequent itemset references item {i} outside the database universe")
            mask |= 1 << i
        if mask == 0:
            raise ValueError("frequent itemsets must be non-empty")
        count = support * m
        if count.denominator != 1 or not 0 < count <= m:
            raise ValueError(f"support {support} is not a transaction count over {m} transactions")
        table[mask] = int(count)
    for mask in table:
        if mask.bit_count() < 2:
            continue
        rest = mask
        while rest:
            bit = rest & -rest
            if (mask ^ bit) not in table:
                raise ValueError("frequent itemsets are not subset-closed; not a mining output")
            rest ^= bit
    return table


def _iter_rule_splits(
    table: dict[int, int],
    min_confidence: Fraction,
    num_transactions: int,
    include_empty_bodies: bool,
) -> Iterator[tuple[int, int, int, int]]:
    """Yield (body_mask, head_mask, body_count, joint_count) for qualifying rules."""
    p = min_confidence.numerator
    q = min_confidence.denominator
    m = num_transactions
    for zmask, joint_count in table.items():
        if include_empty_bodies and joint_count * q >= p * m:
            yield 0, zmask, m, joint_count
        sub = (zmask - 1) & zmask
        while sub:
            body_count = table[sub]
            if joint_count * q >= p * body_count:
                yield sub, zmask ^ sub, body_count, joint_count
            sub = (sub - 1) & zmask


def _mask_to_frozenset(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def derive_rules(
    db: TransactionDatabase,
    frequents: FrequentItemsets,
    min_confidence: Union[Fraction, int, str],
    *,
    min_support: Union[Fraction, int, str, None] = None,
    max_itemset_size: Optional[int] = None,
    include_empty_bodies: bool = False,
) -> RuleSet:
    """All rules (body, head) with frequent union and confidence >= threshold.

    Bodies and heads partition each frequent itemset (head non-empty; empty
    bodies excluded unless ``include_empty_bodies``).  At
    ``min_confidence = 1`` the result is exactly the set of exact
    implications body ⊆ t ⇒ head ⊆ t over all transactions, restricted by
    the support threshold baked into ``frequents``.

    ``min_support`` only annotates the resulting parameters; when omitted it
    is inferred as the smallest support among ``frequents``.
    """
    confidence = Fraction(min_confidence)
    if not 0 < confidence <= 1:
        raise ValueError(f"min_confidence must lie in (0, 1], got {confidence}")
    table = _frequent_count_table(db, frequents)
    m = db.num_transactions
    rules = [
        AssociationRule(
            body=_mask_to_frozenset(body_mask),
            head=_mask_to_frozenset(head_mask),
            body_count=body_count,
            joint_count=joint_count,
            num_transactions=m,
            universe_size=db.universe_size,
        )
        for body_mask, head_mask, body_count, joint_count in _iter_rule_splits(
            table, confidence, m, include_empty_bodies
        )
    ]
    rules.sort(key=AssociationRule.sort_key)
    if min_support is None:
        inferred = min((s for _, s in frequents), default=Fraction(1))
    else:
        inferred = Fraction(min_support)
    params = MiningParams(inferred, confidence, max_itemset_size)
    return RuleSet(tuple(rules), m, db.universe_size, params)


def obs_diam_rules(rs: RuleSet, alpha: Scalar) -> Fraction:
    """Closed-form observable diameter of the rule family at ``alpha``.

    The largest head measure over rules whose body support ``s`` satisfies
    ``alpha < s < 1 - alpha`` (both strict); 0 when no rule qualifies.
    """
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha!r}")
    best = Fraction(0)
    for r in rs.rules:
        s = r.body_support
        if alpha < s < 1 - alpha:
            h = r.head_measure
            if h > best:
                best = h
    return best


def _breakpoint_envelope(rule_counts: Iterable[tuple[int, int]], m: int) -> dict[int, int]:
    """Max head size per breakpoint ``min(body_count, m - body_count)``."""
    envelope: dict[int, int] = {}
    for body_count, head_size in rule_counts:
        beta = body_count if 2 * body_count <= m else m - body_count
        if envelope.get(beta, 0) < head_size:
            envelope[beta] = head_size
    return envelope


def _step_from_envelope(
    envelope: dict[int, int], m: int, universe_size: int
) -> list[tuple[Fraction, Fraction]]:
    """Right-continuous step form of the closed-form observable diameter.

    Returns ``[(alpha_0 = 0, v_0), (alpha_1, v_1), ...]`` with alphas
    strictly increasing and values strictly decreasing; ``v_k`` holds on
    ``[alpha_k, alpha_{k+1})`` and the last value through alpha = 1.  The
    value beyond a boundary ``b`` is the largest head size among rules whose
    breakpoint strictly exceeds ``b``.
    """
    betas = sorted(envelope)
    suffix_max = [0] * (len(betas) + 1)
    for i in range(len(betas) - 1, -1, -1):
        suffix_max[i] = max(suffix_max[i + 1], envelope[betas[i]])
    steps: list[tuple[Fraction, Fraction]] = []
    for boundary in sorted(set(betas) | {0}):
        head_size = suffix_max[bisect_right(betas, boundary)]
        value = Fraction(head_size, universe_size)
        if steps and steps[-1][1] == value:
            continue
        steps.append((Fraction(boundary, m), value))
    return steps


def obs_diam_step_function(rs: RuleSet) -> list[tuple[Fraction, Fraction]]:
    """Exact step form of ``alpha -> obs_diam_rules(rs, alpha)``."""
    envelope = _breakpoint_envelope(
        ((r.body_count, len(r.head)) for r in rs.rules), rs.num_transactions
    )
    return _step_from_envelope(envelope, rs.num_transactions, rs.universe_size)


def _integral_from_steps(steps: Sequence[tuple[Fraction, Fraction]]) -> Fraction:
    total = Fraction(0)
    for (start, value), (end, _) in zip(steps, list(steps[1:]) + [(Fraction(1), Fraction(0))]):
        if value:
            total += (end - start) * min(value, 1)
    return total


def obs_diam_integral(rs: RuleSet) -> Fraction:
    """Exact integral over [0, 1] of the clamped rule observable diameter."""
    return _integral_from_steps(obs_diam_step_function(rs))


def _dimension_from_exact_integral(integral: Fraction) -> Union[Fraction, float]:
    if integral == 0:
        return math.inf
    return 1 / integral**2


def intrinsic_dimension_exact(rs: RuleSet) -> Union[Fraction, float]:
    """Exact intrinsic dimension of the rule family: ``1 / integral**2``.

    ``math.inf`` when the observable diameter vanishes identically (for
    instance an empty rule set).
    """
    return _dimension_from_exact_integral(obs_diam_integral(rs))


@dataclass(frozen=True)
class ThresholdEvaluation:
    """One support/confidence cell: rule count, exact integral, dimension."""

    num_rules: int
    integral: Fraction
    dimension: Union[Fraction, float]
    step_function: tuple[tuple[Fraction, Fraction], ...] = field(repr=False)


def evaluate_rule_thresholds(
    db: TransactionDatabase,
    frequents: FrequentItemsets,
    min_confidence: Union[Fraction, int, str],
    *,
    include_empty_bodies: bool = False,
) -> ThresholdEvaluation:
    """Count rules and compute the exact dimension without materializing rules.

    Streams the same (body, head) splits as :func:`derive_rules`, keeping
    only the per-breakpoint head-size maxima, so dense databases with very
    large rule sets evaluate in O(#rules) time and O(|T|) memory.
    """
    confidence = Fraction(min_confidence)
    if not 0 < confidence <= 1:
        raise ValueError(f"min_confidence must lie in (0, 1], got {confidence}")
    table = _frequent_count_table(db, frequents)
    m = db.num_transactions
    envelope: dict[int, int] = {}
    count = 0
    for _, head_mask, body_count, joint_count in _iter_rule_splits(
        table, confidence, m, include_empty_bodies
    ):
        count += 1
        beta = body_count if 2 * body_count <= m else m - body_count
        head_size = head_mask.bit_count()
        if envelope.get(beta, 0) < head_size:
            envelope[beta] = head_size
    steps = _step_from_envelope(envelope, m, db.universe_size)
    integral = _integral_from_steps(steps)
    return ThresholdEvaluation(
        num_rules=count,
        integral=integral,
        dimension=_dimension_from_exact_integral(integral),
        step_function=tuple(steps),
    )


def to_data_structure(db: TransactionDatabase, rs: RuleSet) -> EmpiricalDataStructure:
    """Structure with one uniformly weighted point per transaction and one
    feature row per rule: the head measure on transactions containing the
    body, 0 elsewhere."""
    m = db.num_transactions
    if rs.num_transactions != m or rs.universe_size != db.universe_size:
        raise ValueError("rule set does not originate from this database")
    weights = (Fraction(1, m),) * m
    rows = []
    for r in rs.rules:
        h = r.head_measure
        rows.append(tuple(h if r.body <= t else Fraction(0) for t in db.transactions))
    return EmpiricalDataStructure(weights, tuple(rows))
