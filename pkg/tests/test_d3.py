"""
D3 operator fitting and counting matrices
"""
import random
from fractions import Fraction

import pytest

from d3 import (
    CountingMatrix,
    D3Operator,
    apply,
    evaluate,
    fit,
    fit_polytope,
    matrices_equivalent,
    matrix_from_operator,
    matrix_to_text,
    operator_from_matrix,
    operator_from_text,
    operator_to_polynomial,
    operator_to_text,
)
from errors import AsymmetricMatrixError, NotCountingShapeError
from gkz import phi0, relation_lattice, series_from_list


def cubic_from_roots(scale, roots):
    """scale * prod (D + r) as ascending coefficients"""
    coeffs = [Fraction(scale)]
    for r in roots:
        shifted = [Fraction(0)] + coeffs
        coeffs = [a + r * b for a, b in zip(shifted, coeffs + [Fraction(0)])]
    return tuple(coeffs + [Fraction(0)] * (4 - len(coeffs)))


def mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += Fraction(a) * b
    return tuple(out + [Fraction(0)] * (4 - len(out)))[:4]


ZERO = (0, 0, 0, 0)

V1_OPERATOR = D3Operator.from_tail([ZERO, ZERO, ZERO, cubic_from_roots(-256, [1, 2, 3])])

V5_OPERATOR = D3Operator.from_tail([ZERO, cubic_from_roots(-64, [1, 1, 1])])

# D^3 - 2t D(1+D)(1+2D) - 8t^2 (1+D)(12+22D+11D^2) - 150t^3 (1+D)(2+D)(3+2D) - 304t^4 (1+D)(2+D)(3+D)
V23_OPERATOR = D3Operator.from_tail([
    mul(cubic_from_roots(-2, [0, 1]), (1, 2)),
    mul((1, 1), (-96, -176, -88)),
    mul(cubic_from_roots(-150, [1, 2]), (3, 2)),
    cubic_from_roots(-304, [1, 2, 3]),
])

V23_MATRIX = CountingMatrix.from_rows([
    (0, 24, 198, 880),
    (1, 2, 44, 198),
    (0, 1, 2, 24),
    (0, 0, 1, 0),
])


def test_evaluate():
    assert evaluate((1, 2, 0, 1), 2) == 13
    assert evaluate(ZERO, 7) == 0


def test_operator_requires_d_cubed_leading_term():
    with pytest.raises(ValueError):
        D3Operator(((Fraction(1), Fraction(0), Fraction(0), Fraction(0)),))
    with pytest.raises(ValueError):
        D3Operator.from_tail([(1, 2, 3)])


def test_padded():
    padded = V5_OPERATOR.padded(4)
    assert padded.tail_degree == 4
    assert padded.padded(2) == V5_OPERATOR
    with pytest.raises(ValueError):
        V1_OPERATOR.padded(3)


def test_apply_known_operator_to_v1(v1):
    series = phi0(relation_lattice(v1), 20)
    assert apply(V1_OPERATOR, series, 20).coefficients == {}
    assert apply(V1_OPERATOR, series, 40).truncation_degree == 20


# fitting

def test_fit_v1_is_unique(v1):
    result = fit_polytope(v1)
    assert result.operator.padded(4) == V1_OPERATOR
    assert not result.underdetermined
    assert operator_to_polynomial(result.operator) == "D^3 + t^4*(-256*D^3 - 1536*D^2 - 2816*D - 1536)"


def test_fit_v5_is_underdetermined(v5):
    series = phi0(relation_lattice(v5), 30)
    result = fit(series)
    assert result.underdetermined
    assert result.operator == V5_OPERATOR.padded(4)
    assert apply(result.operator, series, 30).coefficients == {}
    assert apply(V5_OPERATOR, series, 30).coefficients == {}


def test_fit_v23(v23):
    result = fit_polytope(v23)
    assert not result.underdetermined
    assert result.operator == V23_OPERATOR
    assert result.verified_through >= 25


def test_fit_needs_enough_coefficients(v1):
    with pytest.raises(ValueError):
        fit(phi0(relation_lattice(v1), 20))


def test_fit_of_a_geometric_series_is_trivial_shape():
    # a_m = 1 is killed by D^3 - t (D + 1)^3
    result = fit(series_from_list([1] * 30), J=1)
    assert result.operator == D3Operator.from_tail([cubic_from_roots(-1, [1, 1, 1])])


# text forms

def test_operator_text_round_trip():
    for L in (V1_OPERATOR, V5_OPERATOR, V23_OPERATOR):
        assert operator_from_text(operator_to_text(L)) == L
    assert operator_to_text(V5_OPERATOR).startswith("0:0,0,0,1;1:0,0,0,0;2:-64,-192,-192,-64")


def test_operator_to_polynomial_skips_zero_terms():
    assert operator_to_polynomial(D3Operator.from_tail([ZERO])) == "D^3"
    assert operator_to_polynomial(V5_OPERATOR) == "D^3 + t^2*(-64*D^3 - 192*D^2 - 192*D - 64)"


# counting matrices

def test_v23_matrix_gives_the_fitted_operator():
    assert operator_from_matrix(V23_MATRIX) == V23_OPERATOR
    assert matrix_from_operator(V23_OPERATOR) == V23_MATRIX
    assert matrix_to_text(V23_MATRIX) == "0 24 198 880\n1 2 44 198\n0 1 2 24\n0 0 1 0"


def test_matrix_operator_round_trip():
    rng = random.Random(8)
    for _ in range(200):
        values = {
            name: Fraction(rng.randint(-30, 30), rng.choice((1, 1, 1, 2, 3)))
            for name in ("a00", "a11", "a01", "a12", "a02", "a03")
        }
        A = CountingMatrix.from_entries(**values)
        assert matrix_from_operator(operator_from_matrix(A)) == A
        assert A.entries() == values


def test_matrices_equivalent():
    ok, lam = matrices_equivalent(V23_MATRIX, V23_MATRIX.shifted(5))
    assert ok and lam == 5
    ok, lam = matrices_equivalent(V23_MATRIX, V23_MATRIX.shifted(Fraction(-1, 2)))
    assert ok and lam == Fraction(-1, 2)
    other = CountingMatrix.from_entries(a00=0, a11=2, a01=24, a12=44, a02=198, a03=881)
    assert matrices_equivalent(V23_MATRIX, other) == (False, None)


def test_asymmetric_matrices_are_rejected():
    with pytest.raises(AsymmetricMatrixError):
        CountingMatrix.from_rows([(0, 24, 198, 880), (1, 2, 44, 198), (0, 1, 2, 25), (0, 0, 1, 0)])
    with pytest.raises(AsymmetricMatrixError):
        CountingMatrix.from_rows([(0, 0, 0, 0), (2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0)])
    with pytest.raises(AsymmetricMatrixError):
        CountingMatrix.from_rows([(0, 0, 0), (1, 0, 0), (0, 1, 0)])


def test_operators_outside_the_counting_shape():
    with pytest.raises(NotCountingShapeError):
        matrix_from_operator(D3Operator.from_tail([(0, 1, 0, 0)]))
    with pytest.raises(NotCountingShapeError):
        matrix_from_operator(D3Operator.from_tail([ZERO] * 4 + [(1, 0, 0, 0)]))


def test_v1_operator_has_a_counting_matrix():
    A = matrix_from_operator(V1_OPERATOR)
    assert operator_from_matrix(A) == V1_OPERATOR


def test_v5_closed_form_is_the_fitted_operator(v5):
    # free directions are t L and t^2 L; zeroing them leaves L itself
    result = fit(phi0(relation_lattice(v5), 30))
    assert result.operator == V5_OPERATOR.padded(4)
    assert result.underdetermined


@pytest.mark.slow
def test_every_rank_one_entry_has_a_d3_operator(ground_truth):
    rank_one = [e for e in ground_truth if e.type_label is not None]
    assert len(rank_one) == 23
    for entry in rank_one:
        series = phi0(relation_lattice(entry.polytope()), 28)
        result = fit(series)
        assert apply(result.operator, series, 20).coefficients == {}, entry.id
