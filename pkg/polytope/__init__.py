"""
Lattice polytope geometry
"""
from polytope.faces import Face, FaceLattice, euler_characteristic, face_lattice
from polytope.geometry import (
    AffineLattice,
    Facet,
    Polytope,
    affine_lattice,
    affine_rank,
    dilate,
    dual,
    hull_facets,
    is_reflexive,
    quotient,
    transform,
    translate,
)
from polytope.points import (
    Divisibility,
    divisibility,
    face_lattice_points,
    interior_points,
    lattice_points,
    normalized_volume,
)

__all__ = [
    "AffineLattice",
    "Divisibility",
    "Face",
    "FaceLattice",
    "Facet",
    "Polytope",
    "affine_lattice",
    "affine_rank",
    "dilate",
    "divisibility",
    "dual",
    "euler_characteristic",
    "face_lattice",
    "face_lattice_points",
    "hull_facets",
    "interior_points",
    "is_reflexive",
    "lattice_points",
    "normalized_volume",
    "quotient",
    "translate",
    "transform",
]
