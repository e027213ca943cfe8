"""
Command-line surface, result records and ground-truth verification
"""
from cli.records import (
    COLUMNS,
    VERDICT_COLUMNS,
    ResultRecord,
    VerdictRow,
    compute_record,
    read_tsv,
    render,
    to_json_lines,
    to_tsv,
    verdict_row,
)
from cli.verify import EntryResult, VerifyReport, check_entry, render_report, verify
from cli.workers import map_in_order

__all__ = [
    "COLUMNS",
    "VERDICT_COLUMNS",
    "EntryResult",
    "ResultRecord",
    "VerdictRow",
    "VerifyReport",
    "check_entry",
    "compute_record",
    "map_in_order",
    "read_tsv",
    "render",
    "render_report",
    "to_json_lines",
    "to_tsv",
    "verdict_row",
    "verify",
]
