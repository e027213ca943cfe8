"""
Ground-Truth Verification
Recompute every bundled record and diff it against the printed values
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from cli.workers import map_in_order
from dataset import GroundTruthEntry, expectation_issues
from errors import ConifoldError
from invariants import InvariantRecord, b2_distribution, fano_type, full_record, h21_via_transition

logger = logging.getLogger(__name__)

BANNER = "=" * 70


class EntryResult(BaseModel):
    """Outcome for one ground-truth entry"""
    id: str
    mismatches: List[str] = Field(default_factory=list)
    error: Optional[str] = None
    data_issues: List[str] = Field(default_factory=list)
    record: Optional[InvariantRecord] = None

    @property
    def passed(self) -> bool:
        return self.error is None and not self.mismatches


class VerifyReport(BaseModel):
    results: List[EntryResult]
    histogram: Dict[int, int]
    pyramid_count: int
    realized_types: List[Tuple[int, int]]

    @property
    def failures(self) -> List[EntryResult]:
        return [r for r in self.results if not r.passed]

    @property
    def exit_status(self) -> int:
        return 1 if self.failures else 0


def check_entry(entry: GroundTruthEntry) -> EntryResult:
    """Recompute one entry; never raises for library errors"""
    try:
        record = full_record(entry.polytope(), id=entry.id, type_label=entry.type_label)
    except ConifoldError as exc:
        return EntryResult(id=entry.id, error=f"{type(exc).__name__}: {exc}")

    mismatches = []
    for name, expected in sorted(entry.expected.items()):
        computed = getattr(record, name)
        if computed != expected:
            mismatches.append(f"{name}: expected {expected}, computed {computed}")
    if "vert" in entry.expected and "rk" in entry.expected and record.b2 != entry.expected_b2:
        mismatches.append(f"b2: expected {entry.expected_b2}, computed {record.b2}")
    if record.h21 != h21_via_transition(record):
        mismatches.append(f"h21 {record.h21} differs from the transition form {h21_via_transition(record)}")
    if entry.type_label is not None:
        m = entry.type_label[0]
        if record.b2 != 1:
            mismatches.append(f"type label {entry.type_label} on a Picard rank {record.b2} entry")
        elif fano_type(record.deg, m) != entry.type_label:
            mismatches.append(f"type label {entry.type_label} but deg {record.deg} gives {fano_type(record.deg, m)}")

    return EntryResult(
        id=entry.id,
        mismatches=mismatches,
        data_issues=expectation_issues(entry),
        record=record,
    )


def verify(entries: Sequence[GroundTruthEntry], jobs: int = 1) -> VerifyReport:
    """
    Check every entry, never stopping early

    Args:
        entries: Ground-truth entries (usually load_ground_truth())
        jobs: Worker processes

    Returns:
        VerifyReport with results in entry order
    """
    results = map_in_order(check_entry, entries, jobs)
    records = [r.record for r in results if r.record is not None]
    realized = sorted({r.type_label for r in records if r.type_label is not None and r.b2 == 1})
    report = VerifyReport(
        results=results,
        histogram=b2_distribution(records),
        pyramid_count=sum(1 for r in records if r.py == 1),
        realized_types=realized,
    )
    logger.info("verified %d entries, %d failures", len(results), len(report.failures))
    return report


def render_report(report: VerifyReport) -> str:
    """Plain-text report; identical input gives identical text"""
    lines = []
    for result in report.results:
        if result.error:
            lines.append(f"  [FAIL] {result.id}: {result.error}")
        elif result.mismatches:
            lines.append(f"  [FAIL] {result.id}: {'; '.join(result.mismatches)}")
        else:
            lines.append(f"  [OK] {result.id}")
        for issue in result.data_issues:
            lines.append(f"         data: {issue}")

    rank_one = [r.record for r in report.results if r.record is not None and r.record.type_label is not None]
    if rank_one:
        lines.append("")
        lines.append("Picard rank 1: type label vs kappa index")
        for record in rank_one:
            m, d = record.type_label
            lines.append(f"  {record.id:<8} type=({m},{d})  kappa_index={record.kappa_index}")

    total = len(report.results)
    lines.append("")
    lines.append(BANNER)
    lines.append("VERIFY SUMMARY:")
    lines.append(f"  Passed:         {total - len(report.failures)}/{total}")
    lines.append(f"  B2 histogram:   {', '.join(f'{b}:{c}' for b, c in report.histogram.items())}")
    lines.append(f"  Pyramids:       {report.pyramid_count}")
    lines.append(f"  Realized types: {' '.join(f'({m},{d})' for m, d in report.realized_types)}")
    lines.append(BANNER)
    return "\n".join(lines) + "\n"
