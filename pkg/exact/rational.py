"""
Exact rational linear algebra on numpy object arrays of Fractions
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)

RatVector = Tuple[Fraction, ...]


def as_rational_matrix(rows, cols: Optional[int] = None) -> np.ndarray:
    """Copy a nested sequence or array into an object array of Fractions"""
    if isinstance(rows, np.ndarray):
        cols = rows.shape[1] if rows.ndim == 2 else cols
        rows = rows.tolist()
    rows = [list(r) for r in rows]
    if not rows:
        return np.zeros((0, cols or 0), dtype=object)
    out = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != out.shape[1]:
            raise ValueError("ragged rational matrix")
        for j, x in enumerate(row):
            out[i, j] = Fraction(x)
    return out


def rref(A) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row echelon form

    Args:
        A: Rational matrix

    Returns:
        (R, pivot_columns)
    """
    R = as_rational_matrix(A)
    m, n = R.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        pivot = next((r for r in range(row, m) if R[r, col] != 0), None)
        if pivot is None:
            continue
        if pivot != row:
            R[[row, pivot]] = R[[pivot, row]]
        R[row] = R[row] / R[row, col]
        for r in range(m):
            if r != row and R[r, col] != 0:
                R[r] = R[r] - R[r, col] * R[row]
        pivots.append(col)
        row += 1
    return R, pivots


def rational_rank(A) -> int:
    _, pivots = rref(A)
    return len(pivots)


@dataclass(frozen=True)
class AffineSolution:
    """
    Solution set particular + span(nullspace) of A x = b

    consistent is False for the distinguished inconsistent outcome; then
    particular is None.
    """
    consistent: bool
    particular: Optional[RatVector] = None
    nullspace: Tuple[RatVector, ...] = field(default_factory=tuple)
    free_columns: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def unique(self) -> bool:
        return self.consistent and not self.nullspace


INCONSISTENT = AffineSolution(consistent=False)


def solve_rational(A, b: Sequence) -> AffineSolution:
    """
    Solve A x = b exactly

    Free variables are set to 0 in the particular solution.

    Args:
        A: Rational matrix (m x n)
        b: Right-hand side of length m

    Returns:
        AffineSolution, or INCONSISTENT
    """
    M = as_rational_matrix(A)
    m, n = M.shape
    if len(b) != m:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m}")
    augmented = np.concatenate([M, as_rational_matrix([[x] for x in b], cols=1)], axis=1)
    R, pivots = rref(augmented)
    if n in pivots:
        logger.debug("inconsistent system of %d equations in %d unknowns", m, n)
        return INCONSISTENT

    particular = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        particular[col] = R[r, n]

    free = [c for c in range(n) if c not in pivots]
    nullspace = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for r, col in enumerate(pivots):
            v[col] = -R[r, f]
        nullspace.append(tuple(v))
    return AffineSolution(
        consistent=True,
        particular=tuple(particular),
        nullspace=tuple(nullspace),
        free_columns=tuple(free),
    )
