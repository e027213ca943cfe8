"""
Invariants of conifold Fano hypersurfaces
"""
from invariants.counts import lattice_length, py, sq_dp
from invariants.fano_types import (
    NO_TORIC_CONIFOLD_DEGENERATION,
    RANK_ONE_TYPES,
    REALIZED_TYPES,
    UNREALIZED_TYPES,
    fano_type,
)
from invariants.picard import PicardGroup, PLLattice, picard, pl_lattice, validate_lifts
from invariants.record import (
    Analysis,
    InvariantRecord,
    analyze,
    b2_distribution,
    full_record,
    h21_via_transition,
)

__all__ = [
    "NO_TORIC_CONIFOLD_DEGENERATION",
    "RANK_ONE_TYPES",
    "REALIZED_TYPES",
    "UNREALIZED_TYPES",
    "Analysis",
    "InvariantRecord",
    "PicardGroup",
    "PLLattice",
    "analyze",
    "b2_distribution",
    "fano_type",
    "full_record",
    "h21_via_transition",
    "lattice_length",
    "picard",
    "pl_lattice",
    "py",
    "sq_dp",
    "validate_lifts",
]
