"""
Counting Matrices
4x4 matrices a_ij = a_{3-j,3-i} with unit subdiagonal and their D3 operators
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import sympy

from d3.operator import D3Operator
from errors import AsymmetricMatrixError, NotCountingShapeError

logger = logging.getLogger(__name__)

D = sympy.Symbol("D")
FREE_ENTRIES = ("a00", "a11", "a01", "a12", "a02", "a03")


def _rat(x) -> sympy.Rational:
    x = Fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def _frac(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def _cubic(expr) -> Tuple[Fraction, ...]:
    """Ascending coefficients (c0, c1, c2, c3) of a polynomial in D"""
    poly = sympy.Poly(sympy.expand(expr), D, domain="QQ")
    if poly.degree() > 3:
        raise NotCountingShapeError(f"polynomial {expr} has degree above 3")
    coeffs = [_frac(c) for c in reversed(poly.all_coeffs())]
    return tuple(coeffs + [Fraction(0)] * (4 - len(coeffs)))


def _expr(cubic: Sequence[Fraction]):
    return sum(_rat(c) * D ** e for e, c in enumerate(cubic))


@dataclass(frozen=True)
class CountingMatrix:
    """
    rows[i][j] = a_ij

    Structure: a_{i+1,i} = 1, a_ij = 0 for i > j + 1, and
    a_ij = a_{3-j,3-i}.
    """
    rows: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.rows) != 4 or any(len(r) != 4 for r in self.rows):
            raise AsymmetricMatrixError("counting matrix must be 4x4")
        for i in range(4):
            for j in range(4):
                a = self.rows[i][j]
                if i == j + 1 and a != 1:
                    raise AsymmetricMatrixError(f"subdiagonal entry a{i}{j} = {a} is not 1")
                if i > j + 1 and a != 0:
                    raise AsymmetricMatrixError(f"entry a{i}{j} = {a} below the subdiagonal")
                if a != self.rows[3 - j][3 - i]:
                    raise AsymmetricMatrixError(f"a{i}{j} = {a} differs from a{3 - j}{3 - i}")

    @classmethod
    def from_entries(cls, a00=0, a11=0, a01=0, a12=0, a02=0, a03=0) -> "CountingMatrix":
        """Fill the symmetric template from its six free entries"""
        a00, a11, a01, a12, a02, a03 = (Fraction(x) for x in (a00, a11, a01, a12, a02, a03))
        one, zero = Fraction(1), Fraction(0)
        return cls((
            (a00, a01, a02, a03),
            (one, a11, a12, a02),
            (zero, one, a11, a01),
            (zero, zero, one, a00),
        ))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "CountingMatrix":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    def entries(self) -> dict:
        r = self.rows
        return {"a00": r[0][0], "a11": r[1][1], "a01": r[0][1], "a12": r[1][2], "a02": r[0][2], "a03": r[0][3]}

    def shifted(self, lam) -> "CountingMatrix":
        """A + lam * E"""
        lam = Fraction(lam)
        return CountingMatrix(tuple(
            tuple(x + lam if i == j else x for j, x in enumerate(row)) for i, row in enumerate(self.rows)
        ))


def operator_from_matrix(A: CountingMatrix) -> D3Operator:
    """
    Expand
        D^3 - t(2D+1)((a00+a11)D^2 + (a00+a11)D + a00)
          + t^2 (D+1)(alpha D^2 + beta D + gamma)
          - t^3 (2D+3)(D+2)(D+1) delta
          + t^4 (D+3)(D+2)(D+1) epsilon
    with alpha, beta, gamma, delta, epsilon polynomial in the free entries.
    """
    e = {k: _rat(v) for k, v in A.entries().items()}
    a00, a11, a01, a12, a02, a03 = (e[k] for k in FREE_ENTRIES)
    s = a00 + a11
    alpha = a11 ** 2 + a00 ** 2 + 4 * a11 * a00 - a12 - 2 * a01
    beta = 8 * a11 * a00 - 2 * a12 - 4 * a01 + 2 * a11 ** 2
    gamma = 6 * a11 * a00 - 4 * a01
    delta = a00 ** 2 * a11 + a11 ** 2 * a00 - a12 * a00 + a02 - a11 * a01 - a01 * a00
    epsilon = -a00 ** 2 * a12 + 2 * a02 * a00 + a00 ** 2 * a11 ** 2 - a03 + a01 ** 2 - 2 * a01 * a11 * a00

    p1 = -(2 * D + 1) * (s * D ** 2 + s * D + a00)
    p2 = (D + 1) * (alpha * D ** 2 + beta * D + gamma)
    p3 = -(2 * D + 3) * (D + 2) * (D + 1) * delta
    p4 = (D + 3) * (D + 2) * (D + 1) * epsilon
    return D3Operator.from_tail([_cubic(p) for p in (p1, p2, p3, p4)])


def matrix_from_operator(L: D3Operator) -> CountingMatrix:
    """
    Invert operator_from_matrix stage by stage

    t gives a00 and a11, t^2 gives a01 and a12, t^3 gives a02, t^4 gives a03;
    the result is re-expanded and must reproduce L exactly.

    Raises:
        NotCountingShapeError: if L has terms beyond t^4 or is not of the displayed shape
    """
    try:
        L = L.padded(4)
    except ValueError as exc:
        raise NotCountingShapeError(str(exc)) from exc

    c1 = L.poly(1)
    a00 = -c1[0]
    s = -c1[3] / 2
    a11 = s - a00

    quotient, remainder = sympy.div(sympy.Poly(_expr(L.poly(2)), D, domain="QQ"), sympy.Poly(D + 1, D, domain="QQ"))
    if not remainder.is_zero:
        raise NotCountingShapeError("t^2 coefficient is not divisible by (D+1)")
    q = [_frac(c) for c in reversed(quotient.all_coeffs())] + [Fraction(0)] * 3
    gamma, alpha = q[0], q[2]
    a01 = (6 * a11 * a00 - gamma) / 4
    a12 = a11 ** 2 + a00 ** 2 + 4 * a11 * a00 - 2 * a01 - alpha

    delta = -L.poly(3)[3] / 2
    a02 = delta - (a00 ** 2 * a11 + a11 ** 2 * a00 - a12 * a00 - a11 * a01 - a01 * a00)

    epsilon = L.poly(4)[3]
    a03 = -epsilon - a00 ** 2 * a12 + 2 * a02 * a00 + a00 ** 2 * a11 ** 2 + a01 ** 2 - 2 * a01 * a11 * a00

    A = CountingMatrix.from_entries(a00=a00, a11=a11, a01=a01, a12=a12, a02=a02, a03=a03)
    if operator_from_matrix(A).polys != L.polys:
        raise NotCountingShapeError("operator is not of counting-matrix shape")
    return A


def matrices_equivalent(A: CountingMatrix, B: CountingMatrix) -> Tuple[bool, Optional[Fraction]]:
    """
    B - A = lam * E for some rational lam

    Returns:
        (True, lam) or (False, None)
    """
    lam = B.rows[0][0] - A.rows[0][0]
    for i in range(4):
        for j in range(4):
            diff = B.rows[i][j] - A.rows[i][j]
            if diff != (lam if i == j else 0):
                return False, None
    return True, lam


def matrix_to_text(A: CountingMatrix) -> str:
    """Four lines of space-separated exact entries"""
    return "\n".join(" ".join(str(x) for x in row) for row in A.rows)
