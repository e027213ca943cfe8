"""
PL Lattice and Picard Group
Piecewise-linear functions on the fan of Delta* and the quotient by linear ones
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence, Tuple

from errors import NotABasisError, PhiNotContainedError
from conifold import FaceKind, TwoFaceClass
from exact import (
    as_int_matrix,
    integer_determinant,
    integer_kernel,
    smith_normal_form,
    solve_rational,
    unimodular_inverse,
)
from exact.normal_forms import matmul
from polytope import Polytope
from polytope.geometry import IntVector

logger = logging.getLogger(__name__)


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class PLLattice:
    """
    Integer solutions l of l_i1 + l_i3 = l_i2 + l_i4, one equation per
    unit parallelogram (i1, i2, i3, i4) among the 2-faces
    """
    ambient_rank: int
    equations: Tuple[IntVector, ...]
    basis: Tuple[IntVector, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def rk(self) -> int:
        return self.ambient_rank - self.rank

    def contains(self, l: Sequence[int]) -> bool:
        return all(_dot(eq, l) == 0 for eq in self.equations)

    def coordinates(self, l: Sequence[int]) -> Optional[IntVector]:
        """Integer coordinates of l in the basis, or None if l is not in the lattice"""
        if not self.contains(l):
            return None
        if not self.basis:
            return () if not any(l) else None
        system = as_int_matrix(self.basis, cols=self.ambient_rank).T
        solution = solve_rational(system, list(l))
        if not solution.consistent or any(x.denominator != 1 for x in solution.particular):
            return None
        return tuple(int(x) for x in solution.particular)


def pl_lattice(delta_star: Polytope, face_classes: Iterable[TwoFaceClass]) -> PLLattice:
    """
    Build the PL lattice from the parallelogram 2-faces

    Args:
        delta_star: Polytope whose vertices index the coordinates
        face_classes: Classes of its 2-faces

    Returns:
        PLLattice; rk = n - rank
    """
    n = delta_star.n_vertices
    equations = []
    for cls in face_classes:
        if cls.kind is not FaceKind.UNIT_PARALLELOGRAM:
            continue
        i1, i2, i3, i4 = cls.quadruple
        eq = [0] * n
        eq[i1] += 1
        eq[i3] += 1
        eq[i2] -= 1
        eq[i4] -= 1
        equations.append(tuple(eq))
    basis = tuple(integer_kernel(equations, cols=n))
    logger.debug("PL lattice: %d equations, rank %d of %d", len(equations), len(basis), n)
    return PLLattice(ambient_rank=n, equations=tuple(equations), basis=basis)


@dataclass(frozen=True)
class PicardGroup:
    """
    PL(Delta*) / phi(M)

    lifts are PL vectors whose classes form a basis of the free part;
    kappa_weights c satisfy (kappa, k) = sum_j c_j (lifts_j, k) on the
    relation lattice. kappa_divisibility is the divisibility of the class
    of (1, ..., 1), i.e. of 2 kappa, in the free part.
    """
    pl: PLLattice
    phi: Tuple[IntVector, ...]
    rank: int
    invariant_factors: Tuple[int, ...]
    lifts: Tuple[IntVector, ...]
    kappa_weights: Tuple[Fraction, ...]
    kappa_divisibility: int

    @property
    def torsion(self) -> Tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)

    @property
    def torsion_order(self) -> int:
        order = 1
        for d in self.torsion:
            order *= d
        return order

    @property
    def kappa_index(self) -> Optional[int]:
        """Divisibility of kappa itself, when 2 kappa is divisible by 2"""
        if self.kappa_divisibility % 2:
            return None
        return self.kappa_divisibility // 2


def _phi_rows(delta_star: Polytope) -> Tuple[IntVector, ...]:
    """Images of the standard basis of M: m -> (<m, v_1>, ..., <m, v_n>)"""
    return tuple(tuple(v[j] for v in delta_star.vertices) for j in range(delta_star.dim))


def picard(delta_star: Polytope, pl: PLLattice) -> PicardGroup:
    """
    Picard group as the cokernel of phi inside the PL lattice

    Args:
        delta_star: Reflexive 4-polytope
        pl: Its PL lattice

    Returns:
        PicardGroup with rank n - 4 - rk and the SNF invariant factors

    Raises:
        PhiNotContainedError: if some phi(m) violates a PL equation
    """
    phi = _phi_rows(delta_star)
    coords = []
    for j, row in enumerate(phi):
        c = pl.coordinates(row)
        if c is None:
            raise PhiNotContainedError(f"phi(e_{j + 1}) = {row} is not in the PL lattice")
        coords.append(c)

    snf = smith_normal_form(as_int_matrix(coords, cols=pl.rank))
    s = snf.rank
    new_basis = matmul(unimodular_inverse(snf.right), as_int_matrix(pl.basis, cols=pl.ambient_rank))
    lifts = [tuple(int(x) for x in row) for row in new_basis[s:]]

    solution = solve_rational(new_basis.T, [1] * pl.ambient_rank)
    if not solution.consistent:
        raise PhiNotContainedError("(1, ..., 1) is not in the PL lattice")
    free = [int(x) for x in solution.particular[s:]]

    oriented, weights = [], []
    for lift, c in zip(lifts, free):
        if c < 0:
            lift, c = tuple(-x for x in lift), -c
        oriented.append(lift)
        weights.append(Fraction(c, 2))
    divisibility = 0
    for c in free:
        divisibility = gcd(divisibility, c)

    group = PicardGroup(
        pl=pl,
        phi=phi,
        rank=pl.rank - s,
        invariant_factors=tuple(d for d in snf.diag if d),
        lifts=tuple(oriented),
        kappa_weights=tuple(weights),
        kappa_divisibility=divisibility,
    )
    logger.debug("Picard rank %d, torsion %s", group.rank, group.torsion)
    return group


def validate_lifts(group: PicardGroup, lifts: Sequence[Sequence[int]]) -> Tuple[Fraction, ...]:
    """
    Check that lifts generate the free part of the Picard group

    Returns:
        kappa weights for the given lifts

    Raises:
        NotABasisError: if a lift is outside PL or the classes are not a basis
    """
    if len(lifts) != group.rank:
        raise NotABasisError(f"expected {group.rank} classes, got {len(lifts)}")
    rows = []
    for lift in lifts:
        c = group.pl.coordinates(lift)
        if c is None:
            raise NotABasisError(f"{tuple(lift)} is not in the PL lattice")
        rows.append(c)
    rows += [group.pl.coordinates(row) for row in group.phi]
    square = as_int_matrix(rows, cols=group.pl.rank)
    det = integer_determinant(square) if square.shape[0] == square.shape[1] else 0
    if det == 0 or abs(det) != group.torsion_order:
        raise NotABasisError(f"classes span a sublattice of index {abs(det)} (need {group.torsion_order})")
    ones = group.pl.coordinates([1] * group.pl.ambient_rank)
    solution = solve_rational(square.T, list(ones))
    return tuple(x / 2 for x in solution.particular[: group.rank])
