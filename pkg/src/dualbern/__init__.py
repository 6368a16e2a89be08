"""Fast evaluation of dual Bernstein polynomial bases under Jacobi weights."""

from .bernstein import BernsteinRow, bernstein_all, weight
from .dual import (
    DualTable,
    PrecomputedCoeffs,
    TPair,
    dual_all_at_point,
    dual_all_multi,
    dual_endpoint,
    dual_explicit,
    dual_short_sum,
    dual_via_rec2,
    dual_via_rec3,
    elevation_coefficient,
    forward_eval,
    precompute,
    split_cubic_coefficients,
    split_point,
    t_pair,
    t_poly,
)
from .errors import (
    CoeffMismatch,
    DegenerateRecurrence,
    DomainError,
    SingularCoefficient,
    UndefinedAcc,
    UnsupportedParams,
)
from .estimators import BernsteinLeastSquares, DualBernsteinEvaluator
from .jacobi import (
    JacobiSequence,
    WeightParams,
    jacobi_explicit,
    jacobi_norm,
    jacobi_sequence,
    jacobi_value,
)
from .projection import INTEGRANDS, ProjectionResult, gauss_legendre, project
from .reference import (
    BINARY64_DIGITS,
    AccuracyReport,
    RationalMatrix,
    acc,
    dual_coeffs_exact,
    dual_values_exact,
    gram_matrix,
    highprec_dual_all,
    run_experiment,
)

__version__ = "0.1.0"
