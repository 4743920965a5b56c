"""Partition zeta functions over fixed-length integer partitions.

The central object is the sum of N(lambda)^(-s) over all integer partitions
lambda with exactly k parts, where N(lambda) is the product of the parts.
The package computes it three ways and checks the routes against each other:

  * exactly, at even arguments s = 2m, as a rational multiple of pi^(2mk);
  * numerically on the complex plane, through the explicit formula that
    expands it in zeta(s), zeta(2s), ..., zeta(ks) over the partitions of k;
  * by brute force, as a truncated direct sum over bounded partitions.

Alongside sit exact q-series verifiers for the partial-fraction
decomposition of the length-k partition generating function and for the
exponential partition identity, and restricted Euler products over
constrained part sets.
"""

from .errors import (
    DivergenceRegion,
    DomainError,
    ExponentMismatch,
    FitUnstable,
    InvalidForm,
    NonzeroConstantTerm,
    PoleAt1,
    PoleProximity,
    PrecisionLoss,
)
from .exact import (
    BigRational,
    PiPower,
    bernoulli_numbers,
    format_rational,
    parse_rational,
    partition_zeta_exact,
    zeta2_family_coefficient,
    zeta_even_exact,
)
from .numeric import (
    EvalResult,
    POLE_EXCLUSION_RADIUS,
    PRECISION_LOSS_THRESHOLD,
    ProductForm,
    direct_sum_truncated,
    euler_product_eval,
    partition_zeta_family,
    pole_order_estimate,
    riemann_zeta,
    truncation_error_estimate,
)
from .partitions import (
    Partition,
    enumerate_partitions_fixed_length,
    enumerate_partitions_of_size,
    partition_from_multiplicities,
)
from .qseries import (
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    faa_di_bruno_check,
    geometric_series,
    macmahon_exact_identity,
    macmahon_lhs,
    macmahon_rhs,
    restricted_genfun_coeffs,
    series_exp,
)

__version__ = "0.1.0"

__all__ = [
    # partitions
    "Partition",
    "enumerate_partitions_of_size",
    "enumerate_partitions_fixed_length",
    "partition_from_multiplicities",
    # exact
    "BigRational",
    "PiPower",
    "bernoulli_numbers",
    "zeta_even_exact",
    "partition_zeta_exact",
    "zeta2_family_coefficient",
    "format_rational",
    "parse_rational",
    # numeric
    "EvalResult",
    "ProductForm",
    "riemann_zeta",
    "partition_zeta_family",
    "direct_sum_truncated",
    "truncation_error_estimate",
    "pole_order_estimate",
    "euler_product_eval",
    "POLE_EXCLUSION_RADIUS",
    "PRECISION_LOSS_THRESHOLD",
    # qseries
    "TruncatedSeries",
    "Polynomial",
    "RationalFunction",
    "series_exp",
    "geometric_series",
    "macmahon_lhs",
    "macmahon_rhs",
    "macmahon_exact_identity",
    "faa_di_bruno_check",
    "restricted_genfun_coeffs",
    # errors
    "DomainError",
    "PoleAt1",
    "PoleProximity",
    "DivergenceRegion",
    "PrecisionLoss",
    "FitUnstable",
    "InvalidForm",
    "NonzeroConstantTerm",
    "ExponentMismatch",
]
