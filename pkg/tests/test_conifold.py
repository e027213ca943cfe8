"""
Conifold filter: divisibility by 2 and the 2-face condition
"""
import itertools

import pytest

from conifold import FaceKind, check_conditions, classify_polygon, classify_two_face
from errors import ConifoldError
from polytope import dual, face_lattice, hull_facets


# classify_polygon

def test_standard_triangle():
    cls = classify_polygon([(0, 0), (1, 0), (0, 1)])
    assert cls.kind is FaceKind.UNIMODULAR_TRIANGLE
    assert cls.lattice_point_count == 3
    assert cls.normalized_area == 1
    assert cls.ok


def test_unit_square():
    cls = classify_polygon([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert cls.kind is FaceKind.UNIT_PARALLELOGRAM
    assert cls.normalized_area == 2
    assert cls.quadruple == (0, 1, 3, 2)


def test_triangle_with_edge_midpoint():
    cls = classify_polygon([(0, 0), (2, 0), (0, 1)])
    assert cls.kind is FaceKind.OTHER
    assert cls.witness_point == (1, 0)
    assert not cls.ok


def test_parallelogram_quadruple_satisfies_the_relation():
    pts = [(0, 0), (2, 1), (1, 1), (1, 0)]
    cls = classify_polygon(pts)
    assert cls.kind is FaceKind.UNIT_PARALLELOGRAM
    a, b, c, d = cls.quadruple
    assert tuple(x + y for x, y in zip(pts[a], pts[c])) == tuple(x + y for x, y in zip(pts[b], pts[d]))


def test_classification_ignores_labels_and_order():
    square = [(0, 0), (1, 0), (0, 1), (1, 1)]
    for perm in itertools.permutations(range(4)):
        pts = [square[i] for i in perm]
        labels = [10 + i for i in perm]
        cls = classify_polygon(pts, labels)
        assert cls.kind is FaceKind.UNIT_PARALLELOGRAM
        assert cls.vertex_labels == (10, 11, 12, 13)


def test_classification_in_a_tilted_plane():
    # unit square spanned by (1,1,0,0) and (0,1,1,0), shifted off the origin
    base = (1, 0, 0, -1)
    u, w = (1, 1, 0, 0), (0, 1, 1, 0)
    corners = [
        base,
        tuple(a + b for a, b in zip(base, u)),
        tuple(a + b for a, b in zip(base, w)),
        tuple(a + b + c for a, b, c in zip(base, u, w)),
    ]
    assert classify_polygon(corners).kind is FaceKind.UNIT_PARALLELOGRAM
    assert classify_polygon(corners[:3]).kind is FaceKind.UNIMODULAR_TRIANGLE


def test_classify_two_face_requires_dimension_two(v1):
    facet = face_lattice(v1).of_dim(3)[0]
    with pytest.raises(ValueError):
        classify_two_face(v1, facet)


def test_two_faces_of_v1_are_unimodular_triangles(v1):
    lattice = face_lattice(v1)
    for face in lattice.of_dim(2):
        assert classify_two_face(v1, face).kind is FaceKind.UNIMODULAR_TRIANGLE


# check_conditions

def test_v1_is_accepted_without_parallelograms(v1):
    verdict = check_conditions(v1)
    assert verdict.accepted
    assert verdict.divisibility.k % 2 == 0
    assert verdict.count(FaceKind.UNIT_PARALLELOGRAM) == 0
    assert verdict.quotient is not None


def test_v8_has_24_parallelograms(by_id):
    verdict = check_conditions(by_id["V(8)"].polytope())
    assert verdict.accepted
    assert verdict.count(FaceKind.UNIT_PARALLELOGRAM) == 24


def test_cross_polytope_verdict(cross_polytope):
    verdict = check_conditions(cross_polytope)
    assert verdict.faces_ok
    assert verdict.divisibility.k == 2
    assert verdict.divisible_by_2
    assert verdict.accepted


def test_cube_is_rejected(cube):
    verdict = check_conditions(cube)
    assert verdict.divisibility.k == 1
    assert not verdict.divisible_by_2
    assert not verdict.faces_ok
    assert not verdict.accepted
    assert verdict.count(FaceKind.OTHER) == 24


def test_non_reflexive_input_raises():
    simplex = hull_facets([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (-3, -1, -1, -1)])
    with pytest.raises(ConifoldError):
        check_conditions(simplex)


def test_mutating_a_vertex_of_v1_breaks_the_conditions(v1):
    for i in range(v1.n_vertices):
        vertices = list(v1.vertices)
        vertices[i] = tuple(a + (1 if j == 0 else 0) for j, a in enumerate(vertices[i]))
        try:
            verdict = check_conditions(hull_facets(vertices))
        except ConifoldError:
            continue
        assert not verdict.accepted


def test_parallelogram_relations_hold_at_recorded_indices(v23):
    verdict = check_conditions(v23)
    assert verdict.accepted
    assert verdict.parallelograms()
    for _, cls in verdict.parallelograms():
        a, b, c, d = (v23.vertices[i] for i in cls.quadruple)
        assert tuple(x + y for x, y in zip(a, c)) == tuple(x + y for x, y in zip(b, d))


def test_verdict_reuses_the_dual(v23):
    verdict = check_conditions(v23)
    assert verdict.delta == dual(v23)
    assert verdict.face_lattice.dual_polytope == verdict.delta


@pytest.mark.slow
def test_every_bundled_polytope_is_accepted(ground_truth):
    for entry in ground_truth:
        verdict = check_conditions(entry.polytope())
        assert verdict.accepted, entry.id
        if "sq" in entry.expected:
            four_point = sum(1 for _, c in verdict.face_classes if c.lattice_point_count == 4)
            assert four_point == entry.expected["sq"], entry.id
