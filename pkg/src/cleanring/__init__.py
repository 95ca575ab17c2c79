"""Clean and *-clean decisions for abelian group rings over localized
rings of integers of cyclotomic and quadratic number fields.

Closed-form criteria live in :mod:`cleanring.decide`; every verdict can
be re-derived from the definitions through :mod:`cleanring.oracle`, and
the CLI (``cleanring verify``) sweeps both for agreement.
"""

from .arith import (
    Factorization,
    coprime_part,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    is_primitive_root,
    legendre,
    mult_order,
)
from .decide import (
    Decision,
    GroupSpec,
    StarClean,
    clean_cyclotomic,
    clean_quadratic,
    clean_rational,
    decide,
    field_group_algebra_star_clean,
    star_clean_cyclotomic,
    star_clean_quadratic,
)
from .gfpoly import BACKEND
from .numberfield import (
    CyclotomicField,
    Field,
    PrimeLocalization,
    QuadraticField,
    contains_quadratic,
    degree_adjoin,
    discriminant,
    localize,
    quadratic_real_adjoin_equal,
    real_cyclotomic_adjoin_equal,
    splitting_symbol,
)
from .oracle import (
    ConsistencyReport,
    PrimePoly,
    degree_consistency,
    factor_degrees_cosets,
    factor_degrees_ddf,
    lift_degrees,
    oracle_clean,
    oracle_star_clean,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ConsistencyReport",
    "CyclotomicField",
    "Decision",
    "Factorization",
    "Field",
    "GroupSpec",
    "PrimeLocalization",
    "PrimePoly",
    "QuadraticField",
    "StarClean",
    "clean_cyclotomic",
    "clean_quadratic",
    "clean_rational",
    "contains_quadratic",
    "coprime_part",
    "decide",
    "degree_adjoin",
    "degree_consistency",
    "discriminant",
    "divisors",
    "euler_phi",
    "factor_degrees_cosets",
    "factor_degrees_ddf",
    "factorize",
    "field_group_algebra_star_clean",
    "is_prime",
    "is_primitive_root",
    "legendre",
    "lift_degrees",
    "localize",
    "mult_order",
    "oracle_clean",
    "oracle_star_clean",
    "quadratic_real_adjoin_equal",
    "real_cyclotomic_adjoin_equal",
    "splitting_symbol",
    "star_clean_cyclotomic",
    "star_clean_quadratic",
]
