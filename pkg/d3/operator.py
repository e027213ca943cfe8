"""
D3 Operators
L = sum_j t^j P_j(D) with D = t d/dt, P_0 = D^3 and deg P_j <= 3
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from config import FIT_MIN_DEGREE, FIT_TAIL_DEGREE, FIT_WINDOW_EXTRA
from errors import NoOperatorError
from exact import solve_rational
from gkz import SeriesTable, phi0, relation_lattice
from polytope import Polytope

logger = logging.getLogger(__name__)

Cubic = Tuple[Fraction, Fraction, Fraction, Fraction]
D_CUBED: Cubic = (Fraction(0), Fraction(0), Fraction(0), Fraction(1))


def evaluate(p: Sequence[Fraction], x) -> Fraction:
    """c0 + c1 x + c2 x^2 + c3 x^3"""
    total = Fraction(0)
    for c in reversed(p):
        total = total * x + c
    return total


@dataclass(frozen=True)
class D3Operator:
    """
    polys[j] = (c0, c1, c2, c3) is P_j(D) = c0 + c1 D + c2 D^2 + c3 D^3

    Applied to sum a_m t^m the coefficient of t^m is
    sum_j P_j(m - j) a_{m-j}.
    """
    polys: Tuple[Cubic, ...]

    def __post_init__(self):
        if not self.polys or tuple(self.polys[0]) != D_CUBED:
            raise ValueError("P_0 must be D^3")
        if any(len(p) != 4 for p in self.polys):
            raise ValueError("each P_j needs four coefficients")

    @property
    def tail_degree(self) -> int:
        return len(self.polys) - 1

    @classmethod
    def from_tail(cls, tail: Sequence[Sequence]) -> "D3Operator":
        """Operator D^3 + sum_{j >= 1} t^j P_j from the coefficient quadruples of P_1..P_J"""
        return cls((D_CUBED,) + tuple(tuple(Fraction(c) for c in p) for p in tail))

    def poly(self, j: int) -> Cubic:
        if j < len(self.polys):
            return self.polys[j]
        return (Fraction(0),) * 4

    def padded(self, tail_degree: int) -> "D3Operator":
        if tail_degree < self.tail_degree:
            if any(any(c for c in p) for p in self.polys[tail_degree + 1:]):
                raise ValueError(f"operator has nonzero terms beyond t^{tail_degree}")
            return D3Operator(self.polys[: tail_degree + 1])
        extra = ((Fraction(0),) * 4,) * (tail_degree - self.tail_degree)
        return D3Operator(self.polys + extra)


def apply(L: D3Operator, S: SeriesTable, up_to: int) -> SeriesTable:
    """
    Coefficient-wise image of a one-variable series

    Returns:
        Table complete to min(up_to, S.truncation_degree)
    """
    top = min(up_to, S.truncation_degree)
    a = S.as_list()
    coefficients = {}
    for m in range(top + 1):
        value = Fraction(0)
        for j, p in enumerate(L.polys):
            if m - j >= 0 and a[m - j]:
                value += evaluate(p, m - j) * a[m - j]
        if value:
            coefficients[(m,)] = value
    return SeriesTable(variable_count=1, coefficients=coefficients, truncation_degree=top)


@dataclass(frozen=True)
class FitResult:
    """
    Fitted operator with the leftover freedom

    nullspace lists directions (over the flattened P_1..P_J coefficients)
    that also annihilate the fitting rows; underdetermined is True when it
    is nonempty and the reported operator is the zero-preferred one.
    """
    operator: D3Operator
    nullspace: Tuple[Tuple[Fraction, ...], ...] = field(default_factory=tuple)
    fitting_rows: int = 0
    verified_through: int = 0

    @property
    def underdetermined(self) -> bool:
        return bool(self.nullspace)


def fit(S: SeriesTable, J: int = FIT_TAIL_DEGREE) -> FitResult:
    """
    Find the D3 operator of tail degree J annihilating S

    Unknowns are the 4J coefficients of P_1..P_J; equations are
    sum_j P_j(m - j) a_{m-j} = -m^3 a_m for m = 1..min(4J + 12, truncation).
    Free variables are set to zero, then the operator is checked on every
    available degree.

    Args:
        S: One-variable series complete to degree >= 4J + 9
        J: Tail degree

    Returns:
        FitResult

    Raises:
        NoOperatorError: if the system is inconsistent or verification fails
    """
    need = 4 * J + 9
    if S.truncation_degree < need:
        raise ValueError(f"series known to degree {S.truncation_degree}, fitting needs {need}")
    a = S.as_list()
    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    last = min(4 * J + FIT_WINDOW_EXTRA, S.truncation_degree)
    for m in range(1, last + 1):
        row = []
        for j in range(1, J + 1):
            base = a[m - j] if m - j >= 0 else Fraction(0)
            x = Fraction(m - j)
            row.extend(base * x ** e for e in range(4))
        rows.append(row)
        rhs.append(-(Fraction(m) ** 3) * a[m])

    solution = solve_rational(rows, rhs)
    if not solution.consistent:
        raise NoOperatorError(f"no D3 operator with tail degree {J} fits the first {last} coefficients")
    flat = solution.particular
    operator = D3Operator.from_tail([flat[4 * i: 4 * i + 4] for i in range(J)])

    image = apply(operator, S, S.truncation_degree)
    if image.coefficients:
        bad = min(image.coefficients)[0]
        raise NoOperatorError(f"fitted operator fails at t^{bad}")
    if solution.nullspace:
        logger.info("fit underdetermined: %d free directions set to zero", len(solution.nullspace))
    return FitResult(
        operator=operator,
        nullspace=solution.nullspace,
        fitting_rows=len(rows),
        verified_through=S.truncation_degree,
    )


def fit_polytope(delta_star: Polytope, J: int = FIT_TAIL_DEGREE, degree: Optional[int] = None) -> FitResult:
    """Phi_0 of delta_star to degree (at least 4J + 9), then fit"""
    degree = max(degree or FIT_MIN_DEGREE, 4 * J + 9)
    series = phi0(relation_lattice(delta_star), degree)
    return fit(series, J)


def operator_to_text(L: D3Operator) -> str:
    """Compact exact form "j:c0,c1,c2,c3;..." for j = 0..J"""
    return ";".join(f"{j}:" + ",".join(str(c) for c in p) for j, p in enumerate(L.polys))


def operator_from_text(text: str) -> D3Operator:
    polys = []
    for part in text.split(";"):
        _, _, coeffs = part.partition(":")
        polys.append(tuple(Fraction(c) for c in coeffs.split(",")))
    return D3Operator(tuple(polys))


def _poly_text(p: Sequence[Fraction]) -> str:
    terms = []
    for e in range(3, -1, -1):
        c = p[e]
        if not c:
            continue
        power = {0: "", 1: "D", 2: "D^2", 3: "D^3"}[e]
        if power and abs(c) == 1:
            body = power
        else:
            body = f"{abs(c)}{'*' + power if power else ''}"
        terms.append(("- " if c < 0 else "+ ") + body)
    text = " ".join(terms)
    return text[2:] if text.startswith("+ ") else "-" + text[2:] if text else "0"


def operator_to_polynomial(L: D3Operator) -> str:
    """Readable expanded form, e.g. D^3 + t*(-4*D^3 - 6*D^2 - 2*D)"""
    parts = ["D^3"]
    for j, p in enumerate(L.polys[1:], start=1):
        if any(p):
            t = "t" if j == 1 else f"t^{j}"
            parts.append(f"{t}*({_poly_text(p)})")
    return " + ".join(parts)
