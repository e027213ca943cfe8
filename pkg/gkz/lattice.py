"""
Relation Lattice
Integer relations sum k_i v_i = 0 among the vertices of Delta* and their nonnegative part
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from errors import OddKappaDegreeError
from exact import integer_kernel
from polytope import Polytope
from polytope.geometry import IntVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RelationLattice:
    """
    Saturated kernel of the vertex matrix

    kappa_degree(k) = sum(k) / 2 is integral on the whole lattice.
    """
    vertices: Tuple[IntVector, ...]
    basis: Tuple[IntVector, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def kappa_degree(self, k: Sequence[int]) -> int:
        total = sum(k)
        if total % 2:
            raise OddKappaDegreeError(f"relation {tuple(k)} has odd coordinate sum")
        return total // 2

    def is_relation(self, k: Sequence[int]) -> bool:
        dim = len(self.vertices[0])
        return all(sum(c * v[j] for c, v in zip(k, self.vertices)) == 0 for j in range(dim))


def relation_lattice(delta_star: Polytope) -> RelationLattice:
    """
    Relation lattice of the vertices of Delta* (printed column order)

    Raises:
        OddKappaDegreeError: if a basis vector has odd coordinate sum
    """
    basis = tuple(integer_kernel(delta_star.vertex_matrix()))
    lattice = RelationLattice(vertices=delta_star.vertices, basis=basis)
    for k in basis:
        lattice.kappa_degree(k)
    logger.debug("relation lattice of rank %d on %d vertices", len(basis), delta_star.n_vertices)
    return lattice


def _pack(dim: int, radius: int):
    """Linear injective key for vectors with coordinates in [-radius, radius]"""
    width = 2 * radius + 1
    weights = [width ** j for j in range(dim)]

    def key(v: Sequence[int]) -> int:
        return sum(a * w for a, w in zip(v, weights))

    return key


def enumerate_nonnegative(L: RelationLattice, max_kappa: int) -> List[IntVector]:
    """
    All k in the relation lattice with k >= 0 and kappa degree <= max_kappa

    Depth-first over the vertex multiplicities k_1, k_2, ...; a branch is
    kept only if the remaining vertices can still close the partial sum
    to zero within the remaining budget, which is looked up in exact
    suffix reachability tables. Every visited node therefore extends to
    at least one solution.

    Args:
        L: Relation lattice
        max_kappa: Largest kappa degree to include

    Returns:
        Relations sorted by kappa degree, then lexicographically
    """
    if max_kappa < 0:
        raise ValueError("max_kappa must be nonnegative")
    budget = 2 * max_kappa
    n = L.n
    dim = len(L.vertices[0])
    radius = budget * max(max(abs(x) for x in v) for v in L.vertices)
    key = _pack(dim, radius)
    step = [key(v) for v in L.vertices]

    # reach[i][s] = fewest vertices from i..n-1 whose sum has key s
    reach: List[Dict[int, int]] = [dict() for _ in range(n + 1)]
    reach[n][0] = 0
    for i in range(n - 1, -1, -1):
        table = dict(reach[i + 1])
        for s, used in reach[i + 1].items():
            for c in range(1, budget - used + 1):
                t = s + c * step[i]
                if table.get(t, budget + 1) > used + c:
                    table[t] = used + c
        reach[i] = table

    found: List[IntVector] = []
    k = [0] * n

    def descend(i: int, partial: int, left: int) -> None:
        if i == n:
            if partial == 0:
                found.append(tuple(k))
            return
        nxt = reach[i + 1]
        for c in range(left + 1):
            need = nxt.get(-(partial + c * step[i]))
            if need is not None and need <= left - c:
                k[i] = c
                descend(i + 1, partial + c * step[i], left - c)
        k[i] = 0

    if reach[0].get(0) is not None:
        descend(0, 0, budget)
    found.sort(key=lambda v: (sum(v), v))
    logger.debug("enumerated %d nonnegative relations up to kappa %d", len(found), max_kappa)
    return found


def enumerate_nonnegative_bruteforce(L: RelationLattice, max_kappa: int) -> List[IntVector]:
    """Box scan over [0, 2 max_kappa]^n; only practical for n <= 8"""
    bound = 2 * max_kappa
    n = L.n
    grid = np.indices((bound + 1,) * n, dtype=np.int64).reshape(n, -1).T
    V = np.array(L.vertices, dtype=np.int64)
    mask = (grid @ V == 0).all(axis=1) & (grid.sum(axis=1) <= bound)
    found = [tuple(int(x) for x in row) for row in grid[mask]]
    found.sort(key=lambda v: (sum(v), v))
    return found
