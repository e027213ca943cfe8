"""
Polytope files and the bundled ground-truth dataset
"""
from dataset.load_data import GroundTruthEntry, expectation_issues, load_ground_truth
from dataset.polyfile import RawBlock, format_polytope, parse, parse_blocks

__all__ = [
    "GroundTruthEntry",
    "RawBlock",
    "expectation_issues",
    "format_polytope",
    "load_ground_truth",
    "parse",
    "parse_blocks",
]
