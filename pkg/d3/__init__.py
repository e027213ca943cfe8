"""
D3 differential operators and counting matrices
"""
from d3.matrix import (
    CountingMatrix,
    matrices_equivalent,
    matrix_from_operator,
    matrix_to_text,
    operator_from_matrix,
)
from d3.operator import (
    D3Operator,
    FitResult,
    apply,
    evaluate,
    fit,
    fit_polytope,
    operator_from_text,
    operator_to_polynomial,
    operator_to_text,
)

__all__ = [
    "CountingMatrix",
    "D3Operator",
    "FitResult",
    "apply",
    "evaluate",
    "fit",
    "fit_polytope",
    "matrices_equivalent",
    "matrix_from_operator",
    "matrix_to_text",
    "operator_from_matrix",
    "operator_from_text",
    "operator_to_polynomial",
    "operator_to_text",
]
