"""Exact computation of top Betti defects of complex polynomials via their
singularities at infinity."""

from .poly import LinearChange, ParseError, Poly, PolyError, parse_poly
from .groebner import (
    GLOBAL,
    LOCAL,
    IdealBasis,
    MonomialOrder,
    block_order,
    eliminate,
    in_ideal,
    intersect,
    normal_form,
    poly_gcd,
    saturate,
    saturate_by_ideal,
    squarefree_part,
    standard_basis,
)
from .invariants import is_zero_dim, krull_dim, proj_dim, quotient_dim, staircase
from .singular import (
    AnalysisError,
    AtypicalValueInstability,
    ChartNormalizationFailed,
    GateViolation,
    MilnorPairSums,
    NonIsolatedSingularities,
    SingularityProfile,
    bertini_check,
    fiber_milnor_sum,
    infinity_milnor_pairs,
    jacobian_ideal,
    local_milnor,
    milnor_sum_on_fiber,
    polar_locus,
    singularity_profile,
)
from .betti import (
    BettiReport,
    CurveStratum,
    DefectClass,
    PointStratum,
    StratificationData,
    Verdict,
    chi_smooth,
    classify_defect,
    delta_chi_from_strata,
    delta_eqB,
    delta_eqF,
    euler_sum,
    range_check,
)
from .deform import (
    DeformationSpec,
    DeformVerdict,
    deform,
    dimension_drop_check,
    generic_certificate,
    make_spec,
    semicontinuity_check,
)
from .pipeline import AnalysisResult, analyze

__version__ = "0.1.0"
