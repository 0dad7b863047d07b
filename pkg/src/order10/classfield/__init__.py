"""Class polynomials and singular values of the order-10 functions."""

from .evaluate import (HighPrecComplex, eta_eval, eta_quotient_eval, g0_eval, g_eval,
                       product_eval, series_eval, u0_eval)
from .forms import (ImagQuadPoint, QuadForm, class_number, hilbert_base_quadratic,
                    hilbert_precondition, is_fundamental, reduced_forms)
from .recognize import (AlgebraicCandidate, RecognitionError, integrality_checks,
                        integrality_report, recognize_algebraic)
from .shimura import ShimuraData, conjugate_points, lift_sl2, shimura_matrix
from .singular import (ClassPolynomial, InsufficientPrecision, NonIntegralCoefficients,
                       RootSelectionError, SingularValues,
                       class_polynomial, evaluate_functions, halve_point, singular_values)

__all__ = [
    "AlgebraicCandidate", "ClassPolynomial", "HighPrecComplex", "ImagQuadPoint",
    "InsufficientPrecision", "NonIntegralCoefficients", "QuadForm", "RecognitionError", "RootSelectionError",
    "ShimuraData", "SingularValues", "class_number", "class_polynomial", "conjugate_points",
    "eta_eval", "eta_quotient_eval", "evaluate_functions", "g0_eval", "g_eval", "halve_point",
    "hilbert_base_quadratic", "hilbert_precondition", "integrality_checks",
    "integrality_report", "is_fundamental", "lift_sl2", "product_eval", "recognize_algebraic",
    "reduced_forms", "series_eval", "shimura_matrix", "singular_values", "u0_eval",
]
