"""
Integer Normal Forms
Hermite and Smith normal forms, saturated kernels and determinants over Z

Matrices are numpy arrays of dtype object holding Python ints, so entries
never overflow.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]


def as_int_matrix(rows, cols: Optional[int] = None) -> np.ndarray:
    """
    Build an exact integer matrix

    Args:
        rows: Nested sequence (or array) of integers
        cols: Column count, required only when rows is empty

    Returns:
        2-dim numpy array of dtype object with Python int entries
    """
    if isinstance(rows, np.ndarray) and rows.ndim == 2:
        return np.array([[int(x) for x in row] for row in rows.tolist()], dtype=object).reshape(rows.shape)
    rows = [list(r) for r in rows]
    if not rows:
        return np.zeros((0, cols or 0), dtype=object)
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("ragged integer matrix")
    out = np.empty((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if int(x) != x:
                raise ValueError(f"non-integer entry {x!r}")
            out[i, j] = int(x)
    return out


def identity(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def _rows(M: np.ndarray) -> List[IntVector]:
    return [tuple(int(x) for x in row) for row in M]


def hermite_normal_form(A) -> Tuple[np.ndarray, np.ndarray]:
    """
    Row-style Hermite normal form

    H = U @ A where U is unimodular. H is in row echelon form with positive
    pivots, pivot columns increasing downwards, zero rows last, and every
    entry above a pivot reduced into [0, pivot).

    Args:
        A: Integer matrix

    Returns:
        (H, U)
    """
    H = as_int_matrix(A).copy()
    m, n = H.shape
    U = identity(m)
    row = 0
    for col in range(n):
        if row == m:
            break
        while True:
            nonzero = [r for r in range(row, m) if H[r, col] != 0]
            if not nonzero:
                break
            best = min(nonzero, key=lambda r: abs(H[r, col]))
            if best != row:
                H[[row, best]] = H[[best, row]]
                U[[row, best]] = U[[best, row]]
            clean = True
            for r in range(row + 1, m):
                if H[r, col] != 0:
                    q = H[r, col] // H[row, col]
                    H[r] = H[r] - q * H[row]
                    U[r] = U[r] - q * U[row]
                    if H[r, col] != 0:
                        clean = False
            if clean:
                break
        if H[row, col] == 0:
            continue
        if H[row, col] < 0:
            H[row] = -H[row]
            U[row] = -U[row]
        pivot = H[row, col]
        for r in range(row):
            q = H[r, col] // pivot
            if q:
                H[r] = H[r] - q * H[row]
                U[r] = U[r] - q * U[row]
        row += 1
    return H, U


def integer_rank(A, cols: Optional[int] = None) -> int:
    """Rank of an integer matrix, read from its Hermite normal form"""
    H, _ = hermite_normal_form(as_int_matrix(A, cols))
    return sum(1 for row in H if any(x != 0 for x in row))


@dataclass(frozen=True)
class SmithDecomposition:
    """
    Smith normal form left @ A @ right == diagonal(diag)

    diag has min(rows, cols) entries; nonzero entries come first and each
    divides the next.
    """
    diag: Tuple[int, ...]
    left: np.ndarray
    right: np.ndarray

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d != 0)

    @property
    def torsion(self) -> Tuple[int, ...]:
        """Invariant factors greater than 1"""
        return tuple(d for d in self.diag if d > 1)

    def diagonal_matrix(self) -> np.ndarray:
        D = np.zeros((self.left.shape[0], self.right.shape[0]), dtype=object)
        for i, d in enumerate(self.diag):
            D[i, i] = d
        return D


def _smallest_entry(D: np.ndarray, t: int) -> Optional[Tuple[int, int]]:
    m, n = D.shape
    best = None
    for i in range(t, m):
        for j in range(t, n):
            if D[i, j] != 0 and (best is None or abs(D[i, j]) < abs(D[best])):
                best = (i, j)
    return best


def smith_normal_form(A) -> SmithDecomposition:
    """
    Smith normal form with unimodular transforms

    Args:
        A: Integer matrix (m x n)

    Returns:
        SmithDecomposition with left (m x m) and right (n x n)
    """
    D = as_int_matrix(A).copy()
    m, n = D.shape
    L = identity(m)
    R = identity(n)
    for t in range(min(m, n)):
        pos = _smallest_entry(D, t)
        if pos is None:
            break
        i, j = pos
        D[[t, i]] = D[[i, t]]
        L[[t, i]] = L[[i, t]]
        D[:, [t, j]] = D[:, [j, t]]
        R[:, [t, j]] = R[:, [j, t]]
        while True:
            for i in range(t + 1, m):
                q = D[i, t] // D[t, t]
                if q:
                    D[i] = D[i] - q * D[t]
                    L[i] = L[i] - q * L[t]
            for j in range(t + 1, n):
                q = D[t, j] // D[t, t]
                if q:
                    D[:, j] = D[:, j] - q * D[:, t]
                    R[:, j] = R[:, j] - q * R[:, t]
            leftovers = [(i, t) for i in range(t + 1, m) if D[i, t] != 0]
            leftovers += [(t, j) for j in range(t + 1, n) if D[t, j] != 0]
            if leftovers:
                i, j = min(leftovers, key=lambda p: abs(D[p]))
                if j == t:
                    D[[t, i]] = D[[i, t]]
                    L[[t, i]] = L[[i, t]]
                else:
                    D[:, [t, j]] = D[:, [j, t]]
                    R[:, [t, j]] = R[:, [j, t]]
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i, j] % D[t, t] != 0),
                None,
            )
            if bad is None:
                break
            D[t] = D[t] + D[bad]
            L[t] = L[t] + L[bad]
        if D[t, t] < 0:
            D[t] = -D[t]
            L[t] = -L[t]
    diag = tuple(int(D[t, t]) for t in range(min(m, n)))
    return SmithDecomposition(diag=diag, left=L, right=R)


def integer_kernel(A, cols: Optional[int] = None) -> List[IntVector]:
    """
    Saturated integer kernel

    Args:
        A: Integer matrix (may have zero rows, then pass cols)
        cols: Column count for an empty A

    Returns:
        HNF-reduced lattice basis of {x in Z^n : A x = 0}, as row tuples
    """
    M = as_int_matrix(A, cols)
    n = M.shape[1]
    if M.shape[0] == 0:
        return _rows(identity(n))
    snf = smith_normal_form(M)
    basis = snf.right[:, snf.rank:].T
    if basis.shape[0] == 0:
        return []
    H, _ = hermite_normal_form(basis)
    return [row for row in _rows(H) if any(row)]


def integer_determinant(A) -> int:
    """Determinant of a square integer matrix by fraction-free Bareiss elimination"""
    M = [[int(x) for x in row] for row in as_int_matrix(A)]
    n = len(M)
    if n == 0:
        return 1
    if any(len(row) != n for row in M):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if M[r][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def unimodular_inverse(U) -> np.ndarray:
    """
    Exact inverse of a unimodular matrix

    Raises:
        ValueError: if U is not unimodular
    """
    from exact.rational import as_rational_matrix, rref

    M = as_int_matrix(U)
    n = M.shape[0]
    if M.shape != (n, n) or abs(integer_determinant(M)) != 1:
        raise ValueError("matrix is not unimodular")
    augmented = np.concatenate([as_rational_matrix(M), as_rational_matrix(identity(n))], axis=1)
    reduced, _ = rref(augmented)
    return as_int_matrix([[int(x) for x in row[n:]] for row in reduced])


def matmul(A, B) -> np.ndarray:
    """Exact product of two object-dtype matrices, safe for empty shapes"""
    A = np.asarray(A, dtype=object)
    B = np.asarray(B, dtype=object)
    if A.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=object)
    return A.dot(B)


def in_row_span(rows: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """True if v is an integer combination of the given rows"""
    if not any(v):
        return True
    if not rows:
        return False
    H, _ = hermite_normal_form(list(rows))
    r = list(v)
    for row in H:
        row = list(row)
        lead = next((j for j, x in enumerate(row) if x != 0), None)
        if lead is None:
            break
        if r[lead] % row[lead] != 0:
            return False
        q = r[lead] // row[lead]
        r = [a - q * b for a, b in zip(r, row)]
    return not any(r)
