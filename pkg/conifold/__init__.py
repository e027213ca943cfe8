"""
Conifold degeneration conditions
"""
from conifold.filter import (
    ConifoldVerdict,
    FaceKind,
    TwoFaceClass,
    check_conditions,
    classify_polygon,
    classify_two_face,
)

__all__ = [
    "ConifoldVerdict",
    "FaceKind",
    "TwoFaceClass",
    "check_conditions",
    "classify_polygon",
    "classify_two_face",
]
