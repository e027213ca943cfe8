"""
Exact integer and rational linear algebra
"""
from exact.normal_forms import (
    SmithDecomposition,
    as_int_matrix,
    hermite_normal_form,
    identity,
    in_row_span,
    integer_determinant,
    integer_kernel,
    integer_rank,
    smith_normal_form,
    unimodular_inverse,
)
from exact.rational import (
    INCONSISTENT,
    AffineSolution,
    as_rational_matrix,
    rational_rank,
    rref,
    solve_rational,
)

__all__ = [
    "SmithDecomposition",
    "as_int_matrix",
    "hermite_normal_form",
    "identity",
    "in_row_span",
    "integer_determinant",
    "integer_kernel",
    "integer_rank",
    "smith_normal_form",
    "unimodular_inverse",
    "INCONSISTENT",
    "AffineSolution",
    "as_rational_matrix",
    "rational_rank",
    "rref",
    "solve_rational",
]
