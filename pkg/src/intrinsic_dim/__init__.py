"""Intrinsic dimension of finite data structures via observable diameters,
specialized to association-rule feature families over transaction databases."""

from .geometry import (
    DEFAULT_RESOLUTION,
    MASS_TOLERANCE,
    AlphaGrid,
    EmpiricalDataStructure,
    EmpiricalDistribution,
    GridDimension,
    augment_constants,
    intrinsic_dimension_grid,
    observable_diameter,
    partial_diameter,
    push_forward,
    relabel_points,
)
from .ingest import DatasetError, DatasetStats, parse_transactions, to_fimi
from .mining import (
    AssociationRule,
    MiningParams,
    RuleSet,
    ThresholdEvaluation,
    TransactionDatabase,
    derive_rules,
    evaluate_rule_thresholds,
    intrinsic_dimension_exact,
    mine_frequent_itemsets,
    obs_diam_integral,
    obs_diam_rules,
    obs_diam_step_function,
    to_data_structure,
)
from .synthetic import HypercubeSpec, hamming_cube_structure, random_transaction_db

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_RESOLUTION",
    "MASS_TOLERANCE",
    "AlphaGrid",
    "AssociationRule",
    "DatasetError",
    "DatasetStats",
    "EmpiricalDataStructure",
    "EmpiricalDistribution",
    "GridDimension",
    "HypercubeSpec",
    "MiningParams",
    "RuleSet",
    "ThresholdEvaluation",
    "TransactionDatabase",
    "augment_constants",
    "derive_rules",
    "evaluate_rule_thresholds",
    "hamming_cube_structure",
    "intrinsic_dimension_exact",
    "intrinsic_dimension_grid",
    "mine_frequent_itemsets",
    "obs_diam_integral",
    "obs_diam_rules",
    "obs_diam_step_function",
    "observable_diameter",
    "parse_transactions",
    "partial_diameter",
    "push_forward",
    "random_transaction_db",
    "relabel_points",
    "to_data_structure",
    "to_fimi",
]
