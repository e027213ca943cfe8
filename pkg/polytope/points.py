"""
Lattice Points and Volume
Bounding-box lattice point scans, pulling triangulations and divisibility
"""
import logging
from dataclasses import dataclass
from math import gcd
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from errors import DegeneratePolytopeError
from exact import integer_determinant
from polytope.faces import Face, FaceLattice, face_lattice
from polytope.geometry import IntVector, Polytope, affine_rank, quotient

logger = logging.getLogger(__name__)


def _scan(P: Polytope, strict: bool = False) -> np.ndarray:
    V = np.array(P.vertices, dtype=np.int64)
    lo, hi = V.min(axis=0), V.max(axis=0)
    axes = [np.arange(a, b + 1, dtype=np.int64) for a, b in zip(lo, hi)]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, P.dim)
    normals = np.array([f.normal for f in P.facets], dtype=np.int64)
    offsets = np.array([f.offset for f in P.facets], dtype=np.int64)
    slack = grid @ normals.T + offsets
    mask = (slack > 0).all(axis=1) if strict else (slack >= 0).all(axis=1)
    return grid[mask]


def lattice_points(P: Polytope) -> List[IntVector]:
    """All lattice points of P in lexicographic order"""
    return [tuple(int(x) for x in p) for p in _scan(P)]


def interior_points(P: Polytope) -> List[IntVector]:
    """Lattice points strictly inside every facet"""
    return [tuple(int(x) for x in p) for p in _scan(P, strict=True)]


def face_lattice_points(
    P: Polytope,
    face: Face,
    relative_interior: bool = False,
    points: Optional[Sequence[IntVector]] = None,
) -> List[IntVector]:
    """
    Lattice points of a face

    Args:
        P: Polytope
        face: Face of P
        relative_interior: Keep only points off every facet not containing the face
        points: Precomputed lattice_points(P), to avoid rescanning

    Returns:
        Points tight on every facet of the face
    """
    if points is None:
        points = lattice_points(P)
    tight = [P.facets[i] for i in face.tight_facets]
    others = [f for i, f in enumerate(P.facets) if i not in face.tight_facets]
    out = []
    for p in points:
        if any(f.slack(p) != 0 for f in tight):
            continue
        if relative_interior and any(f.slack(p) == 0 for f in others):
            continue
        out.append(p)
    return out


def _pulling_triangulation(
    P: Polytope,
    lattice: FaceLattice,
    vertex_set: FrozenSet[int],
    dim: int,
    memo: Dict[FrozenSet[int], List[Tuple[int, ...]]],
) -> List[Tuple[int, ...]]:
    if vertex_set in memo:
        return memo[vertex_set]
    if dim == 0:
        simplices = [tuple(vertex_set)]
    else:
        apex = min(vertex_set)
        simplices = []
        for g in lattice.of_dim(dim - 1):
            if g.vertex_indices < vertex_set and apex not in g.vertex_indices:
                for s in _pulling_triangulation(P, lattice, g.vertex_indices, dim - 1, memo):
                    simplices.append((apex,) + s)
    memo[vertex_set] = simplices
    return simplices


def normalized_volume(P: Polytope, lattice: Optional[FaceLattice] = None) -> int:
    """
    d! times the Euclidean volume

    Computed from a pulling triangulation: each face is coned from its
    smallest vertex index over the faces of its boundary that miss it.

    Raises:
        DegeneratePolytopeError: if P is not full-dimensional
    """
    if affine_rank(P.vertices) < P.dim:
        raise DegeneratePolytopeError("volume of a lower-dimensional polytope")
    lattice = lattice or face_lattice(P)
    everything = frozenset(range(P.n_vertices))
    simplices = _pulling_triangulation(P, lattice, everything, P.dim, {})
    total = 0
    for s in simplices:
        base = P.vertices[s[0]]
        rows = [[a - b for a, b in zip(P.vertices[i], base)] for i in s[1:]]
        total += abs(integer_determinant(rows))
    logger.debug("normalized volume %d from %d simplices", total, len(simplices))
    return total


@dataclass(frozen=True)
class Divisibility:
    """
    P = k * quotient + residue with k maximal

    quotient is None when k < 2.
    """
    k: int
    residue: IntVector
    quotient: Optional[Polytope]

    def divisible_by(self, k: int) -> bool:
        return self.k % k == 0


def divisibility(P: Polytope) -> Divisibility:
    """Largest k with all vertices congruent modulo k"""
    base = P.vertices[0]
    k = 0
    for v in P.vertices[1:]:
        for a, b in zip(v, base):
            k = gcd(k, a - b)
    residue = tuple(a % k for a in base) if k else tuple(base)
    q = quotient(P, k, residue) if k >= 2 else None
    return Divisibility(k=k, residue=residue, quotient=q)
