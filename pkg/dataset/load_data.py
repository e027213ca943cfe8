"""
Load the bundled ground-truth dataset
166 reflexive Delta* tables with their expected invariants
"""
import logging
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple

import sys

sys.path.append(str(Path(__file__).parent.parent))
from pydantic import BaseModel, Field

from config import DATASET_PATH
from dataset.polyfile import RawBlock, block_points, parse_blocks
from polytope import Polytope, hull_facets

logger = logging.getLogger(__name__)

EXPECTED_FIELDS = ("deg", "h21", "rk", "sq", "dp", "py", "vert")


class GroundTruthEntry(BaseModel):
    """One bundled polytope and the invariants printed for it"""
    id: str
    vertices: List[Tuple[int, ...]]
    expected: Dict[str, int]
    type_label: Optional[Tuple[int, int]] = None
    errata: List[str] = Field(default_factory=list)

    @property
    def expected_b2(self) -> int:
        return self.expected["vert"] - 4 - self.expected["rk"]

    def polytope(self) -> Polytope:
        return hull_facets(self.vertices)


def _parse_expectations(block: RawBlock) -> Tuple[Dict[str, int], Optional[Tuple[int, int]], List[str]]:
    expected: Dict[str, int] = {}
    type_label = None
    errata = []
    for comment in block.comments:
        if comment.startswith("expect:"):
            for item in comment[len("expect:"):].split():
                name, _, value = item.partition("=")
                if name == "type":
                    m, d = value.split(",")
                    type_label = (int(m), int(d))
                else:
                    expected[name] = int(value)
        elif comment.startswith("erratum:"):
            errata.append(comment[len("erratum:"):].strip())
    return expected, type_label, errata


def load_ground_truth(path: Optional[Path] = None, ids: Optional[Iterable[str]] = None) -> List[GroundTruthEntry]:
    """
    Read ground-truth entries

    Args:
        path: Dataset file (defaults to the bundled one)
        ids: Keep only these ids, in file order

    Returns:
        List of GroundTruthEntry
    """
    path = Path(path or DATASET_PATH)
    wanted = set(ids) if ids is not None else None
    entries = []
    for block in parse_blocks(path.read_text()):
        if wanted is not None and block.label() not in wanted:
            continue
        expected, type_label, errata = _parse_expectations(block)
        entries.append(GroundTruthEntry(
            id=block.label(),
            vertices=block_points(block, "columns"),
            expected=expected,
            type_label=type_label,
            errata=errata,
        ))
    logger.info("loaded %d ground-truth entries from %s", len(entries), path.name)
    return entries


def expectation_issues(entry: GroundTruthEntry) -> List[str]:
    """Internal-consistency problems of the printed values themselves"""
    e = entry.expected
    issues = []
    missing = [f for f in EXPECTED_FIELDS if f not in e and f != "sq"]
    if missing:
        issues.append(f"missing expectations: {', '.join(missing)}")
        return issues
    if e["vert"] != len(entry.vertices):
        issues.append(f"vert={e['vert']} but the table has {len(entry.vertices)} columns")
    if e["h21"] != 1 + e["dp"] - e["rk"] - e["py"]:
        issues.append(f"h21={e['h21']} but 1 + dp - rk - py = {1 + e['dp'] - e['rk'] - e['py']}")
    if "sq" in e and e["sq"] > e["dp"]:
        issues.append(f"sq={e['sq']} exceeds dp={e['dp']}")
    return issues


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="Summarize the bundled ground-truth dataset")
    parser.add_argument("--path", type=str, help="Dataset file (default: bundled)")
    args = parser.parse_args()

    entries = load_ground_truth(args.path)
    for entry in entries:
        problems = expectation_issues(entry)
        if problems:
            print(f"  [ERROR] {entry.id}: {'; '.join(problems)}")
        elif entry.errata:
            print(f"  [FIXED] {entry.id}: {'; '.join(entry.errata)}")
    print("\n" + "=" * 60)
    print("DATASET SUMMARY:")
    print(f"  Entries:      {len(entries)}")
    print(f"  With errata:  {sum(1 for e in entries if e.errata)}")
    print(f"  Pyramids:     {sum(1 for e in entries if e.expected.get('py') == 1)}")
    print("=" * 60)
