"""
Conifold Filter
Divisibility of Delta by 2 and the triangle / parallelogram condition on the 2-faces of Delta*
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from errors import DegeneratePolytopeError
from polytope import (
    Divisibility,
    Face,
    FaceLattice,
    Polytope,
    affine_lattice,
    divisibility,
    dual,
    face_lattice,
    hull_facets,
    lattice_points,
    normalized_volume,
    quotient,
)
from polytope.geometry import IntVector

logger = logging.getLogger(__name__)


class FaceKind(str, Enum):
    UNIMODULAR_TRIANGLE = "triangle"
    UNIT_PARALLELOGRAM = "parallelogram"
    OTHER = "other"


@dataclass(frozen=True)
class TwoFaceClass:
    """
    Classification of a lattice polygon

    For a unit parallelogram, quadruple = (i1, i2, i3, i4) with
    v_i1 + v_i3 = v_i2 + v_i4. For OTHER, witness_point is a lattice point
    that is not a vertex, or witness_area the normalized area when there is
    no such point.
    """
    kind: FaceKind
    lattice_point_count: int
    vertex_labels: Tuple[int, ...]
    normalized_area: int
    quadruple: Optional[Tuple[int, int, int, int]] = None
    witness_point: Optional[IntVector] = None
    witness_area: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.kind is not FaceKind.OTHER


def _pairing(points: Dict[int, IntVector]) -> Optional[Tuple[int, int, int, int]]:
    labels = sorted(points)
    a = labels[0]
    for c in labels[1:]:
        b, d = [x for x in labels[1:] if x != c]
        lhs = tuple(x + y for x, y in zip(points[a], points[c]))
        rhs = tuple(x + y for x, y in zip(points[b], points[d]))
        if lhs == rhs:
            return (a, b, c, d)
    return None


def classify_polygon(points: Sequence[Sequence[int]], labels: Optional[Sequence[int]] = None) -> TwoFaceClass:
    """
    Classify a 2-dimensional lattice polygon in any ambient lattice

    The polygon is projected to its own affine lattice, so the result does
    not depend on the embedding.

    Args:
        points: Vertices (or any spanning point set) of the polygon
        labels: Names reported for the points, default 0..n-1

    Returns:
        TwoFaceClass
    """
    pts = [tuple(int(x) for x in p) for p in points]
    labels = list(labels) if labels is not None else list(range(len(pts)))
    plane = affine_lattice(pts)
    if plane.rank != 2:
        raise DegeneratePolytopeError(f"expected a polygon, got affine rank {plane.rank}")
    polygon = hull_facets(plane.coordinates)
    inside = lattice_points(polygon)
    area = normalized_volume(polygon)

    by_coords = {c: labels[i] for i, c in enumerate(plane.coordinates)}
    vertex_labels = tuple(sorted(by_coords[v] for v in polygon.vertices))
    count = len(inside)

    if len(polygon.vertices) == 3 and count == 3 and area == 1:
        return TwoFaceClass(FaceKind.UNIMODULAR_TRIANGLE, count, vertex_labels, area)
    if len(polygon.vertices) == 4 and count == 4 and area == 2:
        ambient = dict(zip(labels, pts))
        corners = {by_coords[v]: ambient[by_coords[v]] for v in polygon.vertices}
        quad = _pairing(corners)
        if quad is not None:
            return TwoFaceClass(FaceKind.UNIT_PARALLELOGRAM, count, vertex_labels, area, quadruple=quad)

    extra = [p for p in inside if p not in set(polygon.vertices)]
    if extra:
        return TwoFaceClass(FaceKind.OTHER, count, vertex_labels, area, witness_point=plane.lift(extra[0]))
    return TwoFaceClass(FaceKind.OTHER, count, vertex_labels, area, witness_area=area)


def classify_two_face(P: Polytope, face: Face) -> TwoFaceClass:
    """Classify a 2-face of P, labelling corners by their vertex index in P"""
    if face.dim != 2:
        raise ValueError(f"expected a 2-face, got dimension {face.dim}")
    labels = sorted(face.vertex_indices)
    return classify_polygon([P.vertices[i] for i in labels], labels)


@dataclass(frozen=True)
class ConifoldVerdict:
    """Outcome of the two conditions for the pair (Delta, Delta*)"""
    delta_star: Polytope
    delta: Polytope
    divisibility: Divisibility
    divisible_by_2: bool
    quotient: Optional[Polytope]
    faces_ok: bool
    face_classes: Tuple[Tuple[Face, TwoFaceClass], ...]
    face_lattice: FaceLattice

    @property
    def accepted(self) -> bool:
        return self.divisible_by_2 and self.faces_ok

    def count(self, kind: FaceKind) -> int:
        return sum(1 for _, c in self.face_classes if c.kind is kind)

    def parallelograms(self) -> List[Tuple[Face, TwoFaceClass]]:
        return [(f, c) for f, c in self.face_classes if c.kind is FaceKind.UNIT_PARALLELOGRAM]


def check_conditions(delta_star: Polytope) -> ConifoldVerdict:
    """
    Run both conditions on a reflexive Delta*

    Condition (1) is tested on Delta = dual(Delta*), condition (2) on the
    2-faces of Delta*.

    Raises:
        DualNotLatticeError / OriginNotInteriorError: if Delta* is not reflexive
    """
    delta = dual(delta_star)
    div = divisibility(delta)
    by_2 = div.k >= 2 and div.k % 2 == 0
    lattice = face_lattice(delta_star)

    classes = []
    for face in lattice.of_dim(2):
        classes.append((face, classify_two_face(delta_star, face)))
    faces_ok = all(c.ok for _, c in classes)

    verdict = ConifoldVerdict(
        delta_star=delta_star,
        delta=delta,
        divisibility=div,
        divisible_by_2=by_2,
        quotient=quotient(delta, 2) if by_2 else None,
        faces_ok=faces_ok,
        face_classes=tuple(classes),
        face_lattice=lattice,
    )
    logger.info(
        "conifold check: k=%d faces_ok=%s accepted=%s (%d parallelograms)",
        div.k, faces_ok, verdict.accepted, verdict.count(FaceKind.UNIT_PARALLELOGRAM),
    )
    return verdict
