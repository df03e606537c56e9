"""Exact computation of adjacency-restricted sumsets over prime fields and
integer lattices, with polynomial-method lower-bound certificates and
desk-scale theorem verification.
"""

from .bounds import (
    SweepConfig,
    SweepSummary,
    VerificationReport,
    classify_equality,
    collect_sweep,
    eval_bound,
    run_sweep,
    verify_corollary_coverage,
    verify_even_cyclic_theorem,
    verify_l3_theorem,
    verify_odd_linear_theorem,
    verify_torsionfree,
)
from .domain import (
    IntegerLattice,
    PrimeField,
    is_arithmetic_progression,
    lex_compare,
    min_torsion,
)
from .engine import (
    KINDS,
    SetFamily,
    SumsetResult,
    brute_force_oracle,
    cyclic_restricted_sumset,
    distinct_sumset,
    linear_restricted_sumset,
    plain_sumset,
    sumset,
    sumset_cardinality,
)
from .errors import InputError, ResourceCapExceeded, TheoremViolation
from .polys import (
    CoeffCertificate,
    MultiPoly,
    UniPoly,
    certified_lower_bound,
    coeff_of_product_with_linear_power,
    cycle_path_recursion_holds,
    cycle_polynomial,
    even_cycle_coefficient,
    falling_factorial,
    falling_factorial_transform,
    linear_power_coeff,
    odd_path_coefficient,
    path3_coefficient,
    path_polynomial,
    poly_mul,
    transform_identity_holds,
)

__version__ = "0.1.0"

__all__ = [
    "CoeffCertificate", "IntegerLattice", "InputError", "KINDS", "MultiPoly",
    "PrimeField", "ResourceCapExceeded", "SetFamily", "SumsetResult",
    "SweepConfig", "SweepSummary", "TheoremViolation", "UniPoly",
    "VerificationReport", "brute_force_oracle", "certified_lower_bound",
    "classify_equality", "coeff_of_product_with_linear_power", "collect_sweep",
    "cyclic_restricted_sumset", "cycle_path_recursion_holds",
    "cycle_polynomial", "distinct_sumset", "eval_bound",
    "even_cycle_coefficient", "falling_factorial",
    "falling_factorial_transform", "is_arithmetic_progression",
    "lex_compare", "linear_power_coeff", "linear_restricted_sumset",
    "min_torsion", "odd_path_coefficient", "path3_coefficient",
    "path_polynomial", "plain_sumset", "poly_mul", "run_sweep", "sumset",
    "sumset_cardinality", "transform_identity_holds",
    "verify_corollary_coverage", "verify_even_cyclic_theorem",
    "verify_l3_theorem", "verify_odd_linear_theorem", "verify_torsionfree",
]
