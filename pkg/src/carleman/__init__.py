"""Coefficients of the expansion (1+1/x)**x = e(1 - sum c_n/(x+1)**n).

The package computes the sequence c_n three independent ways (exact
recurrence, exact series exponential, numerical quadrature of integral
representations), verifies its quantitative properties, and evaluates
the inequality-refinement weights the sequence gives rise to.
"""

from .coefficients import (
    RECURRENCE,
    SERIES_ORACLE,
    CoefficientTable,
    adjacent_ratios,
    bound_at,
    bound_check,
    monotonicity_check,
    oracle_equivalence_check,
    ratio_trend_check,
    table_invariants_ok,
)
from .integrands import (
    E,
    EndpointSafeFunction,
    entropy_weight,
    moment_density,
    moment_density_derivative,
    scaled_defect,
    scaled_defect_by_quadrature,
)
from .moments import (
    coefficient_by_moment,
    coefficient_by_parts,
    density_identity_checks,
    scaled_derivative_moment,
)
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, QuadratureResult, integrate
from .rational import (
    Rational,
    as_rational,
    is_exact,
    is_reduced,
    parse_rational,
    rational_str,
    to_decimal_str,
)
from .refinement import (
    DemoReport,
    RefinementFactor,
    carleman_demo,
    load_sequence_csv,
    refinement_factor,
    tail_bound,
    truncation_gap,
)
from .report import (
    FAIL,
    PASS,
    REPORTED,
    Check,
    VerificationReport,
    report_from_dict,
    report_from_json,
)
from .verify import corrupted_table, engine_config, run_verification

__version__ = "0.1.0"

__all__ = [
    "RECURRENCE",
    "SERIES_ORACLE",
    "CoefficientTable",
    "adjacent_ratios",
    "bound_at",
    "bound_check",
    "monotonicity_check",
    "oracle_equivalence_check",
    "ratio_trend_check",
    "table_invariants_ok",
    "E",
    "EndpointSafeFunction",
    "entropy_weight",
    "moment_density",
    "moment_density_derivative",
    "scaled_defect",
    "scaled_defect_by_quadrature",
    "coefficient_by_moment",
    "coefficient_by_parts",
    "density_identity_checks",
    "scaled_derivative_moment",
    "DEFAULT_CONFIG",
    "QuadratureConfig",
    "QuadratureResult",
    "integrate",
    "Rational",
    "as_rational",
    "is_exact",
    "is_reduced",
    "parse_rational",
    "rational_str",
    "to_decimal_str",
    "DemoReport",
    "RefinementFactor",
    "carleman_demo",
    "load_sequence_csv",
    "refinement_factor",
    "tail_bound",
    "truncation_gap",
    "FAIL",
    "PASS",
    "REPORTED",
    "Check",
    "VerificationReport",
    "report_from_dict",
    "report_from_json",
    "corrupted_table",
    "engine_config",
    "run_verification",
    "__version__",
]
