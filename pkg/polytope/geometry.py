"""
Lattice Polytopes
Facet enumeration, polar duality and reflexivity for polytopes in Z^d
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from errors import DegeneratePolytopeError, DualNotLatticeError, OriginNotInteriorError
from exact import as_int_matrix, integer_determinant, integer_kernel, integer_rank, solve_rational

logger = logging.getLogger(__name__)

IntVector = Tuple[int, ...]


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True, order=True)
class Facet:
    """Inequality <x, normal> >= -offset with a primitive normal"""
    normal: IntVector
    offset: int

    def slack(self, x: Sequence[int]) -> int:
        """<x, normal> + offset; zero exactly on the facet hyperplane"""
        return _dot(x, self.normal) + self.offset


@dataclass(frozen=True, eq=False)
class Polytope:
    """
    Full-dimensional lattice polytope

    Vertices keep their input order (for the bundled tables, the printed
    column order). Equality compares lexicographically sorted vertex sets.
    """
    dim: int
    vertices: Tuple[IntVector, ...]
    facets: Tuple[Facet, ...]

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def canonical_vertices(self) -> Tuple[IntVector, ...]:
        return tuple(sorted(self.vertices))

    def vertex_matrix(self) -> np.ndarray:
        """d x n exact integer matrix whose columns are the vertices"""
        return as_int_matrix(self.vertices, cols=self.dim).T

    def contains(self, x: Sequence[int]) -> bool:
        return all(f.slack(x) >= 0 for f in self.facets)

    def tight_facets(self, x: Sequence[int]) -> FrozenSet[int]:
        return frozenset(i for i, f in enumerate(self.facets) if f.slack(x) == 0)

    def facet_vertex_sets(self) -> List[FrozenSet[int]]:
        return [
            frozenset(j for j, v in enumerate(self.vertices) if f.slack(v) == 0)
            for f in self.facets
        ]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polytope):
            return NotImplemented
        return self.dim == other.dim and self.canonical_vertices() == other.canonical_vertices()

    def __hash__(self) -> int:
        return hash((self.dim, self.canonical_vertices()))

    def __repr__(self) -> str:
        return f"Polytope(dim={self.dim}, vertices={len(self.vertices)}, facets={len(self.facets)})"


def _primitive(v: Sequence[int]) -> IntVector:
    g = 0
    for x in v:
        g = gcd(g, x)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def _hyperplane_normal(rows: List[List[int]], d: int) -> IntVector:
    """Generalized cross product of d-1 vectors in Z^d via signed minors"""
    normal = []
    for j in range(d):
        minor = [[r[k] for k in range(d) if k != j] for r in rows]
        sign = -1 if j % 2 else 1
        normal.append(sign * integer_determinant(as_int_matrix(minor, cols=d - 1)))
    return tuple(normal)


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull of a nonempty point set"""
    if len(points) < 2:
        return 0
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    return integer_rank(diffs)


def _unique(points: Iterable[Sequence[int]]) -> List[IntVector]:
    seen = set()
    out = []
    for p in points:
        p = tuple(int(x) for x in p)
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def hull_facets(points: Iterable[Sequence[int]]) -> Polytope:
    """
    Convex hull of a lattice point set

    Every d-subset of the points spans a candidate hyperplane; the ones that
    support the point set are the facets. Vertices are the points whose
    tight facet normals have full rank.

    Args:
        points: Integer d-vectors spanning Z^d affinely

    Returns:
        Polytope with irredundant vertices (input order) and sorted primitive facets

    Raises:
        DegeneratePolytopeError: if the affine span has dimension < d
    """
    pts = _unique(points)
    if not pts:
        raise DegeneratePolytopeError("empty point set")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("points of mixed dimension")
    if affine_rank(pts) < d:
        raise DegeneratePolytopeError(f"points span dimension {affine_rank(pts)} < {d}")

    facets = set()
    for subset in combinations(range(len(pts)), d):
        base = pts[subset[0]]
        rows = [[a - b for a, b in zip(pts[i], base)] for i in subset[1:]]
        normal = _hyperplane_normal(rows, d)
        if not any(normal):
            continue
        normal = _primitive(normal)
        level = _dot(base, normal)
        values = [_dot(p, normal) for p in pts]
        if min(values) == level:
            facets.add(Facet(normal, -level))
        elif max(values) == level:
            facets.add(Facet(tuple(-x for x in normal), level))

    facets = tuple(sorted(facets))
    vertices = tuple(
        p for p in pts
        if integer_rank([f.normal for f in facets if f.slack(p) == 0], cols=d) == d
    )
    logger.debug("hull of %d points in Z^%d: %d vertices, %d facets", len(pts), d, len(vertices), len(facets))
    return Polytope(dim=d, vertices=vertices, facets=facets)


def dual(P: Polytope) -> Polytope:
    """
    Polar dual {y : <x, y> >= -1 for all x in P}

    dual(P).vertices[i] comes from P.facets[i] and dual(P).facets[j] comes
    from P.vertices[j], so face correspondences are plain index maps.

    Raises:
        OriginNotInteriorError: if some facet offset is not positive
        DualNotLatticeError: if a dual vertex is not integral
    """
    if any(f.offset <= 0 for f in P.facets):
        raise OriginNotInteriorError("origin is not strictly inside the polytope")
    vertices = []
    for f in P.facets:
        if any(a % f.offset for a in f.normal):
            raise DualNotLatticeError(f"dual vertex {f.normal}/{f.offset} is not integral")
        vertices.append(tuple(a // f.offset for a in f.normal))
    facets = []
    for v in P.vertices:
        if _primitive(v) != v:
            raise DualNotLatticeError(f"vertex {v} is not primitive")
        facets.append(Facet(v, 1))
    return Polytope(dim=P.dim, vertices=tuple(vertices), facets=tuple(facets))


def is_reflexive(P: Polytope) -> bool:
    """Every facet sits at lattice distance one from the origin"""
    return bool(P.facets) and all(f.offset == 1 for f in P.facets)


def translate(P: Polytope, shift: Sequence[int]) -> Polytope:
    vertices = tuple(tuple(a + b for a, b in zip(v, shift)) for v in P.vertices)
    facets = tuple(sorted(Facet(f.normal, f.offset - _dot(shift, f.normal)) for f in P.facets))
    return Polytope(dim=P.dim, vertices=vertices, facets=facets)


def dilate(P: Polytope, k: int) -> Polytope:
    if k <= 0:
        raise ValueError("dilation factor must be positive")
    vertices = tuple(tuple(k * a for a in v) for v in P.vertices)
    facets = tuple(Facet(f.normal, k * f.offset) for f in P.facets)
    return Polytope(dim=P.dim, vertices=vertices, facets=facets)


def quotient(P: Polytope, k: int, residue: Optional[Sequence[int]] = None) -> Polytope:
    """
    (P - m) / k for the common residue m of the vertices modulo k

    Raises:
        ValueError: if the vertices are not congruent modulo k
    """
    m = tuple(residue) if residue is not None else tuple(a % k for a in P.vertices[0])
    vertices = []
    for v in P.vertices:
        shifted = [a - b for a, b in zip(v, m)]
        if any(a % k for a in shifted):
            raise ValueError(f"vertex {v} is not congruent to {m} modulo {k}")
        vertices.append(tuple(a // k for a in shifted))
    facets = []
    for f in P.facets:
        rhs = f.offset + _dot(m, f.normal)
        if rhs % k:
            raise ValueError(f"facet {f} does not descend to the quotient")
        facets.append(Facet(f.normal, rhs // k))
    return Polytope(dim=P.dim, vertices=tuple(vertices), facets=tuple(sorted(facets)))


def transform(P: Polytope, U) -> Polytope:
    """Image of P under the integer linear map x -> U x"""
    M = as_int_matrix(U)
    images = [tuple(int(x) for x in M.dot(np.array(v, dtype=object))) for v in P.vertices]
    return hull_facets(images)


@dataclass(frozen=True)
class AffineLattice:
    """
    Affine lattice origin + span_Z(basis) through a point set

    coordinates[i] are the integer coordinates of the i-th input point.
    """
    origin: IntVector
    basis: Tuple[IntVector, ...]
    coordinates: Tuple[IntVector, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def lift(self, coords: Sequence[int]) -> IntVector:
        out = list(self.origin)
        for c, b in zip(coords, self.basis):
            out = [x + c * y for x, y in zip(out, b)]
        return tuple(out)


def affine_lattice(points: Sequence[Sequence[int]]) -> AffineLattice:
    """
    Saturated lattice of the affine hull of a point set

    The origin is the lexicographically smallest point and the basis is the
    HNF-reduced basis of the saturation of the difference vectors.
    """
    pts = [tuple(int(x) for x in p) for p in points]
    d = len(pts[0])
    origin = min(pts)
    diffs = [[a - b for a, b in zip(p, origin)] for p in pts]
    orthogonal = integer_kernel(diffs, cols=d)
    basis = tuple(integer_kernel(orthogonal, cols=d))
    coordinates = []
    system = as_int_matrix(basis, cols=d).T
    for diff in diffs:
        if not basis:
            coordinates.append(())
            continue
        solution = solve_rational(system, diff)
        if not solution.consistent or any(x.denominator != 1 for x in solution.particular):
            raise ArithmeticError(f"point {diff} is not in the saturated span")
        coordinates.append(tuple(int(x) for x in solution.particular))
    return AffineLattice(origin=origin, basis=basis, coordinates=tuple(coordinates))
