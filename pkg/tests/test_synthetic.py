from fractions import Fraction

import pytest

from intrinsic_dim import (
    HypercubeSpec,
    derive_rules,
    hamming_cube_structure,
    intrinsic_dimension_grid,
    mine_frequent_itemsets,
    parse_transactions,
    random_transaction_db,
    to_fimi,
)
from intrinsic_dim.synthetic import EXACT_WEIGHT_LIMIT
from oracles import brute_rules

F = Fraction


def cube_dimension(n):
    return intrinsic_dimension_grid(hamming_cube_structure(HypercubeSpec(n))).dimension


class TestHammingCube:
    def test_n1_structure_and_dimension(self):
        ds = hamming_cube_structure(HypercubeSpec(1))
        assert ds.weights == (F(1, 2), F(1, 2))
        assert ds.features == ((F(0), F(1)),)
        assert cube_dimension(1) == F(4)

    def test_n2_structure_and_dimension(self):
        ds = hamming_cube_structure(HypercubeSpec(2))
        assert ds.weights == (F(1, 4), F(1, 2), F(1, 4))
        assert ds.features == ((F(0), F(1, 2), F(1)),)
        result = intrinsic_dimension_grid(ds)
        assert result.integral == F(3, 8)
        assert result.dimension == F(64, 9)

    @pytest.mark.parametrize("n", [1, 3, 7, 16, 30])
    def test_exact_weights_sum_to_one(self, n):
        ds = hamming_cube_structure(HypercubeSpec(n))
        assert all(isinstance(w, F) for w in ds.weights)
        assert sum(ds.weights) == 1

    def test_float_fallback_beyond_limit(self):
        ds = hamming_cube_structure(HypercubeSpec(EXACT_WEIGHT_LIMIT + 10))
        assert all(isinstance(w, float) for w in ds.weights)
        assert abs(sum(ds.weights) - 1) <= 1e-12

    def test_dimension_diverges(self):
        dims = [cube_dimension(n) for n in (1, 2, 4, 8, 16, 32, 64)]
        assert all(b > a for a, b in zip(dims, dims[1:]))

    def test_doubling_ratio(self):
        for n in (4, 8, 16, 32):
            assert cube_dimension(2 * n) / cube_dimension(n) >= 1.5

    def test_invalid_dimension(self):
        with pytest.raises(ValueError):
            HypercubeSpec(0)


class TestRandomTransactionDb:
    def test_deterministic_for_fixed_seed(self):
        a = random_transaction_db(42, 6, 10, 0.5)
        b = random_transaction_db(42, 6, 10, 0.5)
        assert a == b

    def test_seed_changes_output(self):
        a = random_transaction_db(1, 6, 10, 0.5)
        b = random_transaction_db(2, 6, 10, 0.5)
        assert a != b

    def test_near_one_probability_collapses(self):
        db = random_transaction_db(7, 4, 5, 1 - 1e-12)
        assert db.transactions == (frozenset({0, 1, 2, 3}),)

    def test_no_empty_transactions(self):
        db = random_transaction_db(3, 3, 40, 0.05)
        assert all(t for t in db.transactions)

    def test_declared_universe_is_n_items(self):
        db = random_transaction_db(5, 9, 4, 0.2)
        assert db.universe_size == 9

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            random_transaction_db(0, 0, 5, 0.5)
        with pytest.raises(ValueError):
            random_transaction_db(0, 5, 0, 0.5)
        with pytest.raises(ValueError):
            random_transaction_db(0, 5, 5, 0.0)
        with pytest.raises(ValueError):
            random_transaction_db(0, 5, 5, 1.0)

    def test_seed_zero_rule_set_matches_oracle(self):
        db = random_transaction_db(0, 6, 10, 0.5)
        frequents = mine_frequent_itemsets(db, F(1, 5))
        rs = derive_rules(db, frequents, 1)
        expected = brute_rules(db, F(1, 5), 1)
        got = {
            (tuple(sorted(r.body)), tuple(sorted(r.head)), r.body_count, r.joint_count)
            for r in rs
        }
        assert got == expected

    def test_fimi_round_trip(self):
        db = random_transaction_db(0, 6, 10, 0.5)
        parsed, stats = parse_transactions(to_fimi(db), declared_universe=db.universe_size)
        assert parsed.as_token_sets() == db.as_token_sets()
        assert parsed.universe_size == db.universe_size
        assert stats.num_duplicates_removed == 0
