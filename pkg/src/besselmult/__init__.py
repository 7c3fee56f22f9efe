"""Bessel multipliers between finite-dimensional l^s spaces."""

from .core import (
    BesselMultError,
    CoefficientExponent,
    DimensionError,
    FunctionalSequence,
    NotRieszError,
    Space,
    Symbol,
    SymbolError,
    VectorSequence,
    analysis_apply,
    conjugate_exponent,
    diagonal_apply,
    dual_pairing,
    lp_norm,
    symbol_classify,
    synthesis_apply,
)
from .duality import (
    DualSystem,
    biorthogonality_check,
    dual_riesz_basis,
    invert_multiplier,
    kernel_witness,
)
from .multiplier import (
    Multiplier,
    RankOne,
    adjoint,
    apply,
    build_multiplier,
    lower_norm_check,
    norm_bound_check,
    nuclear_upper_bound,
    rank_one_identities,
    symbol_recovery,
    trace_norm_hilbert,
    truncate,
    truncation_error_check,
)
from .norms import (
    BoundsCertificate,
    EstimatorSettings,
    NormEstimate,
    bessel_bound,
    frame_bounds,
    injectivity_modulus,
    operator_norm,
    opnorm_power,
    opnorm_sampling_oracle,
    opnorm_upper_interpolation,
    riesz_bounds,
    weak_p_norm,
)

__version__ = "0.1.0"

__all__ = [
    "BesselMultError",
    "CoefficientExponent",
    "DimensionError",
    "FunctionalSequence",
    "NotRieszError",
    "Space",
    "Symbol",
    "SymbolError",
    "VectorSequence",
    "analysis_apply",
    "conjugate_exponent",
    "diagonal_apply",
    "dual_pairing",
    "lp_norm",
    "symbol_classify",
    "synthesis_apply",
    "DualSystem",
    "biorthogonality_check",
    "dual_riesz_basis",
    "invert_multiplier",
    "kernel_witness",
    "Multiplier",
    "RankOne",
    "adjoint",
    "apply",
    "build_multiplier",
    "lower_norm_check",
    "norm_bound_check",
    "nuclear_upper_bound",
    "rank_one_identities",
    "symbol_recovery",
    "trace_norm_hilbert",
    "truncate",
    "truncation_error_check",
    "BoundsCertificate",
    "EstimatorSettings",
    "NormEstimate",
    "bessel_bound",
    "frame_bounds",
    "injectivity_modulus",
    "operator_norm",
    "opnorm_power",
    "opnorm_sampling_oracle",
    "opnorm_upper_interpolation",
    "riesz_bounds",
    "weak_p_norm",
]
