"""Minimum-size combinatorial designs of staircase type.

Exact integer arithmetic for the pair-set statistics alpha/beta/gamma/delta
and the divisor function eps; square-interval classification and the
minimum block count phi(n); weight-minimal staircase decompositions with
an exhaustive cross-checking oracle; materialised two-replication block
designs with incidence export; and a scanner that re-derives every
published list and table, reporting discrepancies instead of hiding them.
"""

from .arith import (
    INPUT_CEILING,
    FactorPair,
    SumPair,
    additive_pairs,
    alpha,
    beta,
    delta,
    delta_range,
    eps,
    eps_range,
    gamma,
    multiplicative_pairs,
)
from .classify import (
    Side,
    SquareInterval,
    classify,
    delta_minimizers,
    min_sum_factor_pair,
    nearest_square_k,
    phi,
)
from .design import (
    DesignReport,
    StaircaseDesign,
    StaircaseMatrix,
    build_design,
    build_matrix,
    incidence_matrix,
    parse_design_file,
    render_design_file,
    render_incidence,
    verify_design,
)
from .partition import (
    ORACLE_CEILING,
    OracleResult,
    StaircasePartition,
    ValidationResult,
    brute_force_min_weight,
    construct_minimal,
    construct_multiblock_extremal,
    construct_multistep,
    format_partition_line,
    iter_staircase_partitions,
    parse_partition_line,
    validate,
    weight_lower_bound,
)
from .predicates import (
    OUTSIDE,
    PROPERTY_IDS,
    Mismatch,
    ScanReport,
    below_quarter_characterized,
    below_quarter_direct,
    half_ladder_class,
    quarter_plus_three_characterized,
    scan_statement,
)
from .primes import is_prime, prime_flags

__version__ = "0.1.0"

__all__ = [
    "INPUT_CEILING",
    "ORACLE_CEILING",
    "OUTSIDE",
    "PROPERTY_IDS",
    "DesignReport",
    "FactorPair",
    "Mismatch",
    "OracleResult",
    "ScanReport",
    "Side",
    "SquareInterval",
    "StaircaseDesign",
    "StaircaseMatrix",
    "StaircasePartition",
    "SumPair",
    "ValidationResult",
    "additive_pairs",
    "alpha",
    "below_quarter_characterized",
    "below_quarter_direct",
    "beta",
    "brute_force_min_weight",
    "build_design",
    "build_matrix",
    "classify",
    "construct_minimal",
    "construct_multiblock_extremal",
    "construct_multistep",
    "delta",
    "delta_minimizers",
    "delta_range",
    "eps",
    "eps_range",
    "format_partition_line",
    "gamma",
    "half_ladder_class",
    "incidence_matrix",
    "is_prime",
    "iter_staircase_partitions",
    "min_sum_factor_pair",
    "multiplicative_pairs",
    "nearest_square_k",
    "parse_design_file",
    "parse_partition_line",
    "phi",
    "prime_flags",
    "quarter_plus_three_characterized",
    "render_design_file",
    "render_incidence",
    "scan_statement",
    "validate",
    "verify_design",
    "weight_lower_bound",
]
