"""
Shared fixtures: the bundled ground truth and a few hand-built polytopes
"""
import itertools
from typing import Dict

import pytest

from dataset import GroundTruthEntry, load_ground_truth
from polytope import Polytope, hull_facets


@pytest.fixture(scope="session")
def ground_truth():
    return load_ground_truth()


@pytest.fixture(scope="session")
def by_id(ground_truth) -> Dict[str, GroundTruthEntry]:
    return {entry.id: entry for entry in ground_truth}


@pytest.fixture(scope="session")
def v1(by_id) -> Polytope:
    return by_id["V(1)"].polytope()


@pytest.fixture(scope="session")
def v2(by_id) -> Polytope:
    return by_id["V(2)"].polytope()


@pytest.fixture(scope="session")
def v5(by_id) -> Polytope:
    return by_id["V(5)"].polytope()


@pytest.fixture(scope="session")
def v23(by_id) -> Polytope:
    return by_id["V(23)"].polytope()


@pytest.fixture(scope="session")
def v70(by_id) -> Polytope:
    return by_id["V(70)"].polytope()


@pytest.fixture(scope="session")
def cube() -> Polytope:
    return hull_facets(itertools.product((-1, 1), repeat=4))


@pytest.fixture(scope="session")
def cross_polytope() -> Polytope:
    points = []
    for i in range(4):
        for s in (1, -1):
            v = [0, 0, 0, 0]
            v[i] = s
            points.append(tuple(v))
    return hull_facets(points)


V1_TEXT = """# V(1)
4 5
1 0 0 0 -4
0 1 0 0 -1
0 0 1 0 -1
0 0 0 1 -1
"""

V23_TEXT = """# V(23)
4 14
0 -3 -2 0 1 -1 -1 -2 -1 0 0 -1 -2 -2
-1 0 -1 0 0 -1 1 0 1 1 0 -1 0 1
1 -1 0 1 0 1 0 0 -1 0 0 0 -1 -1
1 -1 0 0 0 0 -1 -1 0 0 1 1 0 -1
"""

CUBE_TEXT = """# cube
4 16
""" + "\n".join(
    " ".join(str(v[r]) for v in itertools.product((-1, 1), repeat=4)) for r in range(4)
) + "\n"


@pytest.fixture
def v1_file(tmp_path):
    path = tmp_path / "v1.poly"
    path.write_text(V1_TEXT)
    return path


@pytest.fixture
def v23_file(tmp_path):
    path = tmp_path / "v23.poly"
    path.write_text(V23_TEXT)
    return path


@pytest.fixture
def cube_file(tmp_path):
    path = tmp_path / "cube.poly"
    path.write_text(CUBE_TEXT)
    return path
