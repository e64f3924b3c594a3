"""Rotation operators for any quantized spin as exact matrix polynomials.

Spin enters every API as the integer ``two_j`` (twice the spin), so
half-integer spins are represented losslessly.  All series, Vandermonde,
dual-matrix, and biorthogonal data are exact ``fractions.Fraction``
values; floating point appears only where a transcendental evaluation
forces it (sin/cos of the angle, the eigendecomposition oracle).
"""

from .biorthogonal import (
    DualFunction,
    basis_power,
    cos_sine_integral,
    dual_function,
    dual_pairing,
    dual_truncation_series,
    extract_coefficient_fourier,
    verify_biorthonormality,
)
from .central_factorials import (
    ArcsinSeries,
    CentralFactorialTable,
    arcsin_power_series,
    cfn,
    cfn_table,
    verify_cfn_recurrence,
)
from .coefficients import (
    CoefficientPolynomial,
    closed_form_sine_coefficient,
    coefficient,
    coefficient_cfn_route,
    coefficient_truncation_route,
    differentiate_coefficient,
    epsilon,
    evaluate_coefficient,
    verify_second_order_ode,
)
from .rotation import (
    OracleError,
    RotationResult,
    compare_rotation,
    rotation_polynomial,
    rotation_reference,
)
from .spin_algebra import (
    axis_dot_J,
    diagonal_doubled_spin,
    spin_triple,
    unit_axis,
    verify_power_reduction,
)
from .vandermonde import (
    ProjectorPair,
    VandermondeData,
    build_vandermonde,
    cfn_from_vandermonde,
    dual_matrices,
    metric,
    projector_pair,
    verify_trace_identities,
)
from .verify import SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "ArcsinSeries",
    "CentralFactorialTable",
    "CoefficientPolynomial",
    "DualFunction",
    "OracleError",
    "ProjectorPair",
    "RotationResult",
    "SUITES",
    "VandermondeData",
    "arcsin_power_series",
    "axis_dot_J",
    "basis_power",
    "build_vandermonde",
    "cfn",
    "cfn_from_vandermonde",
    "cfn_table",
    "closed_form_sine_coefficient",
    "coefficient",
    "coefficient_cfn_route",
    "coefficient_truncation_route",
    "compare_rotation",
    "cos_sine_integral",
    "diagonal_doubled_spin",
    "differentiate_coefficient",
    "dual_function",
    "dual_matrices",
    "dual_pairing",
    "dual_truncation_series",
    "epsilon",
    "evaluate_coefficient",
    "extract_coefficient_fourier",
    "metric",
    "projector_pair",
    "rotation_polynomial",
    "rotation_reference",
    "run_suite",
    "spin_triple",
    "unit_axis",
    "verify_biorthonormality",
    "verify_cfn_recurrence",
    "verify_power_reduction",
    "verify_second_order_ode",
    "verify_trace_identities",
]
