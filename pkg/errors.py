"""
Exceptions raised by the toolkit
Every computational failure is a ConifoldError; the CLI maps them to exit status 1
"""
from typing import Optional


class ConifoldError(Exception):
    """Base class for all toolkit errors"""


class DegeneratePolytopeError(ConifoldError):
    """Point set does not affinely span the ambient lattice"""


class OriginNotInteriorError(ConifoldError):
    """The origin is not strictly inside the polytope"""


class DualNotLatticeError(ConifoldError):
    """Polar dual has a non-integral vertex"""


class NotReflexiveError(ConifoldError):
    pass


class NotAcceptedError(ConifoldError):
    """Polytope fails the divisibility or the 2-face condition"""


class NoQuotientError(ConifoldError):
    """Polytope is not divisible by 2"""


class PhiNotContainedError(ConifoldError):
    """Image of M is not contained in the PL lattice"""


class OddKappaDegreeError(ConifoldError):
    """A relation has odd coordinate sum"""


class NotABasisError(ConifoldError):
    """Lifted Picard classes do not generate the free quotient"""


class NoOperatorError(ConifoldError):
    """No D3 operator of the requested shape annihilates the series"""


class AsymmetricMatrixError(ConifoldError):
    """Counting matrix violates a_ij = a_{3-j,3-i} or the subdiagonal structure"""


class NotCountingShapeError(ConifoldError):
    """Operator cannot be written through a counting matrix"""


class PolytopeFileError(ConifoldError, ValueError):
    """
    Malformed polytope file

    Args:
        message: Description of the problem
        line: 1-based line number
        column: 1-based column of the offending token (if known)
    """

    def __init__(self, message: str, line: int, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{message} ({where})")


class MalformedHeaderError(PolytopeFileError):
    pass


class EntryCountMismatchError(PolytopeFileError):
    pass


class NonIntegerTokenError(PolytopeFileError):
    pass


class AmbiguousOrientationError(PolytopeFileError):
    pass
