"""
Invariant Records
Everything attached to one accepted Delta*: deg, h21, rk, sq, dp, py, vert, b2
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from pydantic import BaseModel, Field

from conifold import ConifoldVerdict, check_conditions
from errors import ConifoldError, NotAcceptedError
from invariants.counts import py, sq_dp
from invariants.picard import PicardGroup, PLLattice, picard, pl_lattice
from polytope import Polytope, normalized_volume

logger = logging.getLogger(__name__)


class InvariantRecord(BaseModel):
    """Invariants of the smoothing Y attached to one polytope"""
    id: str = ""
    vert: int
    rk: int
    sq: int
    dp: int
    py: int
    deg: int
    h21: int
    b2: int
    picard_invariant_factors: List[int] = Field(default_factory=list)
    torsion: List[int] = Field(default_factory=list)
    kappa_index: Optional[int] = None
    type_label: Optional[Tuple[int, int]] = None


@dataclass(frozen=True)
class Analysis:
    """Intermediate objects behind a record, reused by the series and fit stages"""
    verdict: ConifoldVerdict
    pl: PLLattice
    picard: PicardGroup
    record: InvariantRecord


def analyze(
    delta_star: Polytope,
    id: str = "",
    type_label: Optional[Tuple[int, int]] = None,
    verdict: Optional[ConifoldVerdict] = None,
) -> Analysis:
    """
    Run the conifold filter and compute every invariant

    Args:
        delta_star: Reflexive 4-polytope
        id: Label stored in the record
        type_label: Fano type (m, deg/2m^2) taken from the dataset, if known
        verdict: Precomputed check_conditions(delta_star)

    Returns:
        Analysis

    Raises:
        NotAcceptedError: if delta_star fails the conifold filter
    """
    verdict = verdict or check_conditions(delta_star)
    if not verdict.accepted:
        raise NotAcceptedError(
            f"{id or 'polytope'} rejected: divisible_by_2={verdict.divisible_by_2} faces_ok={verdict.faces_ok}"
        )
    classes = [c for _, c in verdict.face_classes]
    pl = pl_lattice(delta_star, classes)
    group = picard(delta_star, pl)
    sq, dp = sq_dp(delta_star, verdict.face_lattice, verdict.face_classes)
    pyramid = py(verdict.delta)

    volume = normalized_volume(verdict.delta)
    if volume % 16:
        raise ConifoldError(f"normalized volume {volume} of Delta is not divisible by 16")

    n = delta_star.n_vertices
    b2 = n - 4 - pl.rk
    if group.rank != b2:
        raise ConifoldError(f"Picard rank {group.rank} differs from n - 4 - rk = {b2}")

    record = InvariantRecord(
        id=id,
        vert=n,
        rk=pl.rk,
        sq=sq,
        dp=dp,
        py=pyramid,
        deg=volume // 16,
        h21=1 + dp - pl.rk - pyramid,
        b2=b2,
        picard_invariant_factors=list(group.invariant_factors),
        torsion=list(group.torsion),
        kappa_index=group.kappa_index,
        type_label=type_label,
    )
    logger.info("%s: deg=%d h21=%d rk=%d b2=%d", id, record.deg, record.h21, record.rk, record.b2)
    return Analysis(verdict=verdict, pl=pl, picard=group, record=record)


def full_record(
    delta_star: Polytope,
    id: str = "",
    type_label: Optional[Tuple[int, int]] = None,
) -> InvariantRecord:
    """InvariantRecord of an accepted Delta*; raises NotAcceptedError otherwise"""
    return analyze(delta_star, id=id, type_label=type_label).record


def h21_via_transition(record: InvariantRecord) -> int:
    """
    h21 through the conifold transition: 1 - py + dp + rho(X) - rho(X^)

    rho(X) = b2 and rho(X^) - rho(X) = rk.
    """
    rho_x = record.b2
    rho_resolved = rho_x + record.rk
    return 1 - record.py + record.dp + rho_x - rho_resolved


def b2_distribution(records: Iterable[InvariantRecord]) -> Dict[int, int]:
    """Histogram Picard number -> count"""
    counts = Counter(r.b2 for r in records)
    return {b2: counts[b2] for b2 in sorted(counts)}
