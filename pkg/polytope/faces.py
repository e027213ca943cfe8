"""
Face Lattices
All proper faces of a polytope and, for reflexive polytopes, the dual-face map
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from polytope.geometry import Polytope, affine_rank, dual, is_reflexive

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Face:
    """
    Face of a polytope given by vertex indices

    tight_facets lists the facets containing the face; the face is the
    intersection of the polytope with them.
    """
    dim: int
    vertex_indices: FrozenSet[int]
    tight_facets: FrozenSet[int]

    def sort_key(self) -> Tuple[int, ...]:
        return tuple(sorted(self.vertex_indices))


@dataclass(frozen=True)
class FaceLattice:
    polytope: Polytope
    faces: Dict[int, Tuple[Face, ...]]
    dual_polytope: Optional[Polytope] = None
    dual_links: Dict[Face, Face] = field(default_factory=dict)

    def of_dim(self, k: int) -> Tuple[Face, ...]:
        return self.faces.get(k, ())

    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(self.of_dim(k)) for k in range(self.polytope.dim))

    def all_faces(self) -> List[Face]:
        return [face for k in sorted(self.faces) for face in self.faces[k]]

    def subfaces(self, face: Face, dim: Optional[int] = None) -> List[Face]:
        """Faces strictly contained in face (of the given dimension if set)"""
        dims = [dim] if dim is not None else range(face.dim)
        return [
            g for k in dims for g in self.of_dim(k)
            if g.vertex_indices < face.vertex_indices
        ]


def euler_characteristic(lattice: FaceLattice) -> int:
    """Alternating sum of the f-vector; equals 1 - (-1)^d for a d-polytope"""
    return sum((-1) ** k * n for k, n in enumerate(lattice.f_vector()))


def face_lattice(P: Polytope) -> FaceLattice:
    """
    Enumerate every proper nonempty face

    Faces are the nonempty intersections of facet vertex sets, closed under
    intersection. For reflexive P the dual links map a face with tight
    facets T to the face of dual(P) whose vertices are T.

    Args:
        P: Polytope

    Returns:
        FaceLattice with faces grouped by dimension
    """
    facet_sets = P.facet_vertex_sets()
    found = set(facet_sets)
    frontier = set(facet_sets)
    while frontier:
        fresh = set()
        for F in frontier:
            for G in facet_sets:
                meet = F & G
                if meet and meet != F and meet not in found:
                    fresh.add(meet)
        found |= fresh
        frontier = fresh

    grouped = defaultdict(list)
    for vertex_set in found:
        points = [P.vertices[i] for i in sorted(vertex_set)]
        tight = frozenset(i for i, S in enumerate(facet_sets) if vertex_set <= S)
        grouped[affine_rank(points)].append(Face(affine_rank(points), vertex_set, tight))
    faces = {k: tuple(sorted(v, key=Face.sort_key)) for k, v in grouped.items()}

    if not is_reflexive(P):
        return FaceLattice(polytope=P, faces=faces)

    Q = dual(P)
    links = {}
    for k, members in faces.items():
        for face in members:
            links[face] = Face(P.dim - 1 - k, face.tight_facets, face.vertex_indices)
    logger.debug("face lattice f-vector %s", tuple(len(faces.get(k, ())) for k in range(P.dim)))
    return FaceLattice(polytope=P, faces=faces, dual_polytope=Q, dual_links=links)
