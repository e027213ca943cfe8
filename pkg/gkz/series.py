"""
Hypergeometric Series
Phi_0 and the multi-parameter Phi as exact coefficient tables
"""
import hashlib
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import SERIES_CACHE_SIZE
from gkz.lattice import RelationLattice, enumerate_nonnegative
from invariants import PicardGroup, validate_lifts
from polytope.geometry import IntVector

logger = logging.getLogger(__name__)

Degree = Tuple[int, ...]


@dataclass(frozen=True)
class SeriesTable:
    """
    Truncated power series with exact rational coefficients

    coefficients maps a (multi)degree to its coefficient; every degree with
    kappa level <= truncation_degree is present when nonzero. For a
    multi-parameter table kappa_weights turns a multidegree into its
    kappa level.
    """
    variable_count: int
    coefficients: Dict[Degree, Fraction]
    truncation_degree: int
    kappa_weights: Optional[Tuple[Fraction, ...]] = None

    def coefficient(self, degree) -> Fraction:
        if isinstance(degree, int):
            degree = (degree,)
        return self.coefficients.get(tuple(degree), Fraction(0))

    def as_list(self) -> List[Fraction]:
        """Dense coefficient list a_0 .. a_truncation of a one-variable table"""
        if self.variable_count != 1:
            raise ValueError("dense list of a multi-variable series")
        return [self.coefficient(m) for m in range(self.truncation_degree + 1)]

    def kappa_level(self, degree: Degree) -> Fraction:
        if self.kappa_weights is None:
            return Fraction(degree[0])
        return sum((w * d for w, d in zip(self.kappa_weights, degree)), Fraction(0))

    def items(self) -> List[Tuple[Degree, Fraction]]:
        return sorted(self.coefficients.items(), key=lambda kv: (self.kappa_level(kv[0]), kv[0]))

    def truncated(self, degree: int) -> "SeriesTable":
        kept = {d: c for d, c in self.coefficients.items() if self.kappa_level(d) <= degree}
        return SeriesTable(self.variable_count, kept, min(degree, self.truncation_degree), self.kappa_weights)


def series_from_list(values: Sequence) -> SeriesTable:
    """One-variable table from a dense coefficient list"""
    coefficients = {(m,): Fraction(a) for m, a in enumerate(values) if a}
    return SeriesTable(variable_count=1, coefficients=coefficients, truncation_degree=len(values) - 1)


def _laurent_powers(points: Tuple[IntVector, ...], max_power: int):
    """
    Yield f^m for m = 0..max_power with f = sum x^p as dense coefficient arrays

    The array for f^m covers the box [-m r, m r] with r the per-axis radius
    of the points, so index i holds the exponent i - m r. Coefficients of
    f^m sum to n^m; int64 is used while that stays below 2^63.
    """
    P = np.array(points, dtype=np.int64)
    r = np.abs(P).max(axis=0)
    dtype = np.int64 if len(points) ** max_power < 2 ** 63 else object
    current = np.ones((1,) * P.shape[1], dtype=dtype)
    yield current
    for m in range(1, max_power + 1):
        nxt = np.zeros(tuple(2 * m * r + 1), dtype=dtype)
        for v in P:
            region = tuple(slice(int(a + b), int(a + b) + size) for a, b, size in zip(r, v, current.shape))
            nxt[region] += current
        current = nxt
        yield current


@lru_cache(maxsize=SERIES_CACHE_SIZE)
def constant_terms(points: Tuple[IntVector, ...], max_kappa: int) -> Tuple[int, ...]:
    """
    CT((sum_i x^{v_i})^{2m}) for m = 0..max_kappa

    Meet in the middle: CT(f^{2m}) = sum_p [x^p] f^m * [x^-p] f^m, and the
    array of f^m flipped along every axis holds [x^-p] f^m at p.
    """
    out = []
    for half in _laurent_powers(points, max_kappa):
        flat = half.ravel()
        mirrored = np.flip(half).ravel()
        both = (flat != 0) & (mirrored != 0)
        if not both.any():
            out.append(0)
            continue
        out.append(int(np.dot(flat[both].astype(object), mirrored[both].astype(object))))
    return tuple(out)


def phi0(L: RelationLattice, max_kappa: int, method: str = "constant-term") -> SeriesTable:
    """
    One-parameter series sum_{k >= 0} ((kappa,k)!)^2 / prod k_i! t^{(kappa,k)}

    Args:
        L: Relation lattice
        max_kappa: Truncation degree
        method: "constant-term" (default) or "lattice" (sum over enumerated relations)

    Returns:
        SeriesTable in one variable, complete to max_kappa
    """
    if method == "constant-term":
        cts = constant_terms(tuple(L.vertices), max_kappa)
        coefficients = {}
        for m, ct in enumerate(cts):
            if ct:
                coefficients[(m,)] = Fraction(factorial(m) ** 2 * ct, factorial(2 * m))
    elif method == "lattice":
        acc: Dict[Degree, Fraction] = defaultdict(Fraction)
        for k in enumerate_nonnegative(L, max_kappa):
            m = L.kappa_degree(k)
            acc[(m,)] += _term(m, k)
        coefficients = dict(acc)
    else:
        raise ValueError(f"unknown method {method!r}")
    return SeriesTable(variable_count=1, coefficients=coefficients, truncation_degree=max_kappa)


def _term(kappa: int, k: Sequence[int]) -> Fraction:
    denominator = 1
    for x in k:
        denominator *= factorial(x)
    return Fraction(factorial(kappa) ** 2, denominator)


def phi_multi(
    L: RelationLattice,
    group: PicardGroup,
    max_kappa: int,
    lifts: Optional[Sequence[Sequence[int]]] = None,
) -> SeriesTable:
    """
    Multi-parameter series graded by Picard classes

    The exponent of t_j is (lambda_j, k) for the lifted Picard basis
    lambda_1..lambda_r (group.lifts unless lifts is given).

    Raises:
        NotABasisError: if the given lifts do not generate the free part
    """
    if lifts is None:
        lifts, weights = group.lifts, group.kappa_weights
    else:
        weights = validate_lifts(group, lifts)
    acc: Dict[Degree, Fraction] = defaultdict(Fraction)
    for k in enumerate_nonnegative(L, max_kappa):
        degree = tuple(sum(a * b for a, b in zip(lift, k)) for lift in lifts)
        acc[degree] += _term(L.kappa_degree(k), k)
    return SeriesTable(
        variable_count=len(lifts),
        coefficients=dict(acc),
        truncation_degree=max_kappa,
        kappa_weights=tuple(weights),
    )


def collapse(table: SeriesTable) -> SeriesTable:
    """Sum the coefficients of each kappa level into a one-variable table"""
    if table.kappa_weights is None:
        return table
    acc: Dict[Degree, Fraction] = defaultdict(Fraction)
    for degree, c in table.coefficients.items():
        level = table.kappa_level(degree)
        if level.denominator != 1:
            raise ArithmeticError(f"multidegree {degree} has fractional kappa level {level}")
        acc[(int(level),)] += c
    return SeriesTable(variable_count=1, coefficients=dict(acc), truncation_degree=table.truncation_degree)


def series_hash(table: SeriesTable) -> str:
    """sha256 over the canonical "degree:num/den;" text of the table"""
    text = "".join(
        f"{','.join(str(d) for d in degree)}:{c.numerator}/{c.denominator};"
        for degree, c in table.items()
    )
    return hashlib.sha256(f"{table.truncation_degree}|{text}".encode()).hexdigest()


def kappa_form(table: SeriesTable) -> Tuple[Fraction, ...]:
    """Weights c with (kappa, k) = sum_j c_j (lambda_j, k) for a multi-variable table"""
    if table.kappa_weights is None:
        return (Fraction(1),)
    return tuple(table.kappa_weights)
