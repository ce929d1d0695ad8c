"""Exact arithmetic for the Enriques lattice and the component
classification of polarized moduli spaces by profile.

The lattice layer works in a fixed rank-10 basis with integer-only
arithmetic. On top of it sit a brute-force search oracle for profiles, the
closed-form coefficient parametrization with its rewrite algorithm, the
genus-by-genus component enumeration, and cross-checking suites.
"""

from .lattice import (
    D,
    K,
    NumClass,
    PicClass,
    RANK,
    ZERO,
    from_decomposition,
    generator_e,
    generator_pair,
    genus,
    gram_determinant,
    gram_matrix,
    gram_signature,
    is_positive,
    is_primitive,
    is_two_divisible,
    pair,
    self_int,
    standard_sequence,
)
from .oracle import (
    IsotropicSequence,
    PhiVector,
    box_isotropics,
    compare_tuples,
    eight_lowest,
    enumerate_isotropics,
    order_key,
    pairing_tuple,
    phi,
    phi_vector_oracle,
)
from .fundamental import (
    Decomposition,
    FundamentalCoefficients,
    class_from_presentation,
    coefficients_from_phivector,
    epsilon_normalize,
    format_coefficients,
    fundamental_presentation,
    genus_of,
    iter_coefficient_tuples,
    parse_coefficients,
    phivector_from_coefficients,
    quadratic_value,
    rewrite_to_fundamental,
    simple_decomposition_error,
    validate_simple_decomposition,
)
from .components import (
    BoundsReport,
    DominationReport,
    ModuliComponent,
    NumericalComponent,
    RhoSummary,
    classical_bounds_audit,
    component_name,
    dominating_component_check,
    enumerate_components,
    enumerate_components_by_phi,
    numerical_components,
    numerical_name,
    rho_fiber_structure,
    unirationality_flag,
)
from .verify import CheckResult, SUITES, golden_low_phi, phi_profiles_direct, run_suite

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "CheckResult",
    "D",
    "Decomposition",
    "DominationReport",
    "FundamentalCoefficients",
    "IsotropicSequence",
    "K",
    "ModuliComponent",
    "NumClass",
    "NumericalComponent",
    "PhiVector",
    "PicClass",
    "RANK",
    "RhoSummary",
    "SUITES",
    "ZERO",
    "box_isotropics",
    "class_from_presentation",
    "classical_bounds_audit",
    "coefficients_from_phivector",
    "compare_tuples",
    "component_name",
    "dominating_component_check",
    "eight_lowest",
    "enumerate_components",
    "enumerate_components_by_phi",
    "enumerate_isotropics",
    "epsilon_normalize",
    "format_coefficients",
    "from_decomposition",
    "fundamental_presentation",
    "generator_e",
    "generator_pair",
    "genus",
    "genus_of",
    "golden_low_phi",
    "gram_determinant",
    "gram_matrix",
    "gram_signature",
    "is_positive",
    "is_primitive",
    "is_two_divisible",
    "iter_coefficient_tuples",
    "numerical_components",
    "numerical_name",
    "order_key",
    "pair",
    "pairing_tuple",
    "parse_coefficients",
    "phi",
    "phi_profiles_direct",
    "phi_vector_oracle",
    "phivector_from_coefficients",
    "quadratic_value",
    "rewrite_to_fundamental",
    "rho_fiber_structure",
    "run_suite",
    "self_int",
    "simple_decomposition_error",
    "standard_sequence",
    "unirationality_flag",
    "validate_simple_decomposition",
]
