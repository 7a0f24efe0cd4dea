"""Exact split-octonion algebra, its automorphism Lie algebra, flag
geometry, cyclic Higgs-bundle PDE solving, and machine certification."""

from .octonion import (
    ExactScalar,
    Oct,
    ImOct,
    mul,
    qform,
    qnorm,
    cross,
    associator,
    triple_product,
)
from .bases import CrossBasis, NullTriple, model_c_basis, verify_cross_basis
from .lie import (
    Derivation,
    Sl2Class,
    char_family,
    derivation_defect,
    extend_derivation,
    g2_dimension,
    leibniz_nullspace,
    regularity_invariant,
    root_vector,
)
from .flags import (
    NullLine,
    Photon,
    SpacePoint,
    TangentVector,
    annihilator,
    cross_tangent,
    duality_circle,
    in_thickening,
    iso3_orbit,
    photon_pair_orbit,
    pointing_vector_ein,
    pointing_vector_pho,
    project_to_g2,
    tangent_metric,
)
from .pencils import (
    FrenetSplitting,
    Pencil,
    RSpace,
    beta_base_membership,
    ein_fiber_point,
    pho_base_membership,
    pho_fiber_point,
    r_space,
    standard_alpha_pencil,
    standard_beta_pencil,
)
from .hitchin import (
    HitchinData,
    HitchinState,
    SolveResult,
    check_max_principles,
    classify_stability,
    flat_constant_data,
    hitchin_constant_data,
    solve,
)
from .certify import (
    AlphaSample,
    BetaSample,
    RationalPoly,
    alpha_immersion_quantity,
    beta_immersion_quantity,
    certify_polynomial_positive,
    fuchsian_pho_transversality,
    hitchin_span_positivity,
    pho_sturm_polynomials,
)

__version__ = "1.0.0"

__all__ = [
    "AlphaSample",
    "BetaSample",
    "CrossBasis",
    "Derivation",
    "ExactScalar",
    "FrenetSplitting",
    "HitchinData",
    "HitchinState",
    "ImOct",
    "NullLine",
    "NullTriple",
    "Oct",
    "Pencil",
    "Photon",
    "RSpace",
    "RationalPoly",
    "Sl2Class",
    "SolveResult",
    "SpacePoint",
    "TangentVector",
    "alpha_immersion_quantity",
    "annihilator",
    "associator",
    "beta_base_membership",
    "beta_immersion_quantity",
    "certify_polynomial_positive",
    "char_family",
    "check_max_principles",
    "classify_stability",
    "cross",
    "cross_tangent",
    "derivation_defect",
    "duality_circle",
    "ein_fiber_point",
    "extend_derivation",
    "flat_constant_data",
    "fuchsian_pho_transversality",
    "g2_dimension",
    "hitchin_constant_data",
    "hitchin_span_positivity",
    "in_thickening",
    "iso3_orbit",
    "leibniz_nullspace",
    "model_c_basis",
    "mul",
    "pho_base_membership",
    "pho_fiber_point",
    "pho_sturm_polynomials",
    "photon_pair_orbit",
    "pointing_vector_ein",
    "pointing_vector_pho",
    "project_to_g2",
    "qform",
    "qnorm",
    "r_space",
    "regularity_invariant",
    "root_vector",
    "solve",
    "standard_alpha_pencil",
    "standard_beta_pencil",
    "tangent_metric",
    "triple_product",
    "verify_cross_basis",
]
