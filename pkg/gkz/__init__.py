"""
Relation lattices and hypergeometric series of reflexive polytopes
"""
from gkz.lattice import (
    RelationLattice,
    enumerate_nonnegative,
    enumerate_nonnegative_bruteforce,
    relation_lattice,
)
from gkz.series import (
    SeriesTable,
    collapse,
    constant_terms,
    kappa_form,
    phi0,
    phi_multi,
    series_from_list,
    series_hash,
)

__all__ = [
    "RelationLattice",
    "SeriesTable",
    "collapse",
    "constant_terms",
    "enumerate_nonnegative",
    "enumerate_nonnegative_bruteforce",
    "kappa_form",
    "phi0",
    "phi_multi",
    "relation_lattice",
    "series_from_list",
    "series_hash",
]
