from fractions import Fraction

import pytest

from intrinsic_dim import TransactionDatabase, derive_rules, mine_frequent_itemsets

TOY_TEXT = "a b\na b c\nc\n"


@pytest.fixture
def toy_db() -> TransactionDatabase:
    """I = {a, b, c}; T = {{a,b}, {a,b,c}, {c}} with a,b,c -> 0,1,2."""
    return TransactionDatabase(
        3,
        (frozenset({0, 1}), frozenset({0, 1, 2}), frozenset({2})),
        labels=("a", "b", "c"),
    )


@pytest.fixture
def toy_rules(toy_db):
    frequents = mine_frequent_itemsets(toy_db, Fraction(1, 3))
    return derive_rules(toy_db, frequents, 1, min_support=Fraction(1, 3))


@pytest.fixture
def toy_file(tmp_path):
    path = tmp_path / "toy.dat"
    path.write_text(TOY_TEXT, encoding="utf-8")
    return path
