"""
Face Counts
sq, dp and the pyramid indicator py
"""
import logging
from math import gcd
from typing import Iterable, Tuple

from conifold import TwoFaceClass
from errors import NoQuotientError
from polytope import (
    Face,
    FaceLattice,
    Polytope,
    affine_lattice,
    divisibility,
    hull_facets,
    interior_points,
    is_reflexive,
    quotient,
    translate,
)

logger = logging.getLogger(__name__)


def lattice_length(u, w) -> int:
    """Number of lattice segments on the edge [u, w]"""
    g = 0
    for a, b in zip(u, w):
        g = gcd(g, a - b)
    return g


def sq_dp(
    delta_star: Polytope,
    lattice: FaceLattice,
    face_classes: Iterable[Tuple[Face, TwoFaceClass]],
) -> Tuple[int, int]:
    """
    sq = sum (|face points| - 3), dp = sum (|face points| - 3) * length(dual edge)

    Edge lengths are measured in Delta', where Delta = 2 Delta', so the
    length on the dual edge of Delta is halved.

    Args:
        delta_star: Reflexive polytope
        lattice: face_lattice(delta_star), with dual links
        face_classes: (2-face, class) pairs

    Returns:
        (sq, dp)
    """
    delta = lattice.dual_polytope
    if delta is None:
        raise ValueError("face lattice has no dual links")
    sq = dp = 0
    for face, cls in face_classes:
        excess = cls.lattice_point_count - 3
        if not excess:
            continue
        edge = lattice.dual_links[face]
        u, w = [delta.vertices[i] for i in sorted(edge.vertex_indices)]
        sq += excess
        dp += excess * (lattice_length(u, w) // 2)
    return sq, dp


def py(delta: Polytope) -> int:
    """
    1 if Delta = 2 Delta' with Delta' a pyramid over a 3-dim reflexive polytope

    The base facet must hold every vertex but the apex and, in its own
    3-dim lattice, have exactly one interior point; translated to that
    point it must be reflexive.

    Raises:
        NoQuotientError: if Delta is not divisible by 2
    """
    if not divisibility(delta).divisible_by(2):
        raise NoQuotientError("polytope is not divisible by 2")
    half = quotient(delta, 2)
    n = half.n_vertices
    for vertex_set in half.facet_vertex_sets():
        if len(vertex_set) != n - 1:
            continue
        plane = affine_lattice([half.vertices[i] for i in sorted(vertex_set)])
        base = hull_facets(plane.coordinates)
        inner = interior_points(base)
        if len(inner) != 1:
            continue
        if is_reflexive(translate(base, tuple(-x for x in inner[0]))):
            return 1
    return 0
