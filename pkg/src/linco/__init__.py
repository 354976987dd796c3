"""Exact linearization coefficients for orthogonal polynomial families.

The package computes expectations of products of orthogonal polynomials as
crossing-weighted sums over inhomogeneous set partitions, entirely in exact
rational arithmetic over the variables t, q and alpha.  Seven families are
built in; every partition-side result can be cross-checked against an
independent recurrence-and-moments path.
"""

from .algebra import (
    ALPHA,
    ExactPoly,
    InexactDivisionError,
    ONE,
    Q,
    Rational,
    T,
    XPoly,
    ZERO,
    q_factorial,
    q_integer,
)
from .cumulants import (
    DEFAULT_MOMENT_CAP,
    cumulant,
    moment_from_cumulants,
    weighted_cumulant_product,
)
from .families import (
    DEFAULT_DEGREE_CAP,
    FAMILY_NAMES,
    FamilySpec,
    UnknownFamilyError,
    family_spec,
    integrate,
    norm_squared,
    polynomial,
)
from .linearize import (
    CheckResult,
    ExpansionResult,
    LinearizationResult,
    STRUCTURAL_FAMILIES,
    VERIFY_SUITES,
    VerificationReport,
    compositions,
    expansion_coefficients,
    linearize,
    linearize_oracle,
    linearize_partition_sum,
    product_expansion_statistic,
    reconstruct,
    verify_suite,
)
from .partitions import (
    Composition,
    DEFAULT_ENUMERATION_CAP,
    DimensionMismatchError,
    ENUMERATION_CAP_ENV,
    FILTER_NAMES,
    MalformedPartitionError,
    PartitionStats,
    SetPartition,
    SizeLimitError,
    canonicalize,
    compute_stats,
    enumerate_inhomogeneous,
    enumerate_partitions,
    is_inhomogeneous,
    is_noncrossing,
    matches_filter,
    restricted_crossings,
    singleton_depth,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA",
    "CheckResult",
    "Composition",
    "DEFAULT_DEGREE_CAP",
    "DEFAULT_ENUMERATION_CAP",
    "DEFAULT_MOMENT_CAP",
    "DimensionMismatchError",
    "ENUMERATION_CAP_ENV",
    "ExactPoly",
    "ExpansionResult",
    "FAMILY_NAMES",
    "FILTER_NAMES",
    "FamilySpec",
    "InexactDivisionError",
    "LinearizationResult",
    "MalformedPartitionError",
    "ONE",
    "PartitionStats",
    "Q",
    "Rational",
    "STRUCTURAL_FAMILIES",
    "SetPartition",
    "SizeLimitError",
    "T",
    "UnknownFamilyError",
    "VERIFY_SUITES",
    "VerificationReport",
    "XPoly",
    "ZERO",
    "canonicalize",
    "compositions",
    "compute_stats",
    "cumulant",
    "enumerate_inhomogeneous",
    "enumerate_partitions",
    "expansion_coefficients",
    "family_spec",
    "integrate",
    "is_inhomogeneous",
    "is_noncrossing",
    "linearize",
    "linearize_oracle",
    "linearize_partition_sum",
    "matches_filter",
    "moment_from_cumulants",
    "norm_squared",
    "polynomial",
    "product_expansion_statistic",
    "q_factorial",
    "q_integer",
    "reconstruct",
    "restricted_crossings",
    "singleton_depth",
    "verify_suite",
    "weighted_cumulant_product",
]
