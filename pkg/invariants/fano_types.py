"""
Picard-rank-one Fano threefold types
Type (m, d): Fano index m and degree 2 m^2 d
"""
from fractions import Fraction
from typing import Dict, Tuple, Union

FanoType = Tuple[int, int]

RANK_ONE_TYPES: Tuple[FanoType, ...] = (
    (4, 2),
    (3, 3),
    (2, 1), (2, 2), (2, 3), (2, 4), (2, 5),
    (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (1, 11),
)

# Types with no conifold degeneration among the 166
UNREALIZED_TYPES: Dict[FanoType, str] = {
    (2, 1): "V6 in P(3,2,1,1,1)",
    (1, 1): "V6 in P(3,1,1,1,1)",
    (1, 2): "V4 in P^4",
    (1, 3): "V2,3 in P^5",
}

REALIZED_TYPES: Tuple[FanoType, ...] = tuple(t for t in RANK_ONE_TYPES if t not in UNREALIZED_TYPES)

# Types reached by a hypersurface conifold degeneration but not a toric one
NO_TORIC_CONIFOLD_DEGENERATION: Tuple[FanoType, ...] = (
    (2, 2), (2, 3), (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9),
)


def fano_type(deg: int, m: int) -> Tuple[int, Union[int, Fraction]]:
    """Type label (m, deg / 2m^2); the second entry is an int when exact"""
    d = Fraction(deg, 2 * m * m)
    return (m, int(d) if d.denominator == 1 else d)
