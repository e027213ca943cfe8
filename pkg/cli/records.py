"""
Result Records
One line per polytope: tab-separated under a versioned header, or JSON lines
"""
import logging
from typing import List, Optional, Sequence

from pydantic import BaseModel, Field

from config import FIT_MIN_DEGREE, RECORD_HEADER
from conifold import FaceKind, check_conditions
from d3 import fit, operator_to_text
from errors import ConifoldError, DualNotLatticeError, NoOperatorError, NotAcceptedError, OriginNotInteriorError
from gkz import phi0, relation_lattice, series_hash
from invariants import analyze
from polytope import Polytope

logger = logging.getLogger(__name__)

COLUMNS = (
    "id", "status", "accepted", "vert", "rk", "sq", "dp", "py", "deg", "h21", "b2",
    "torsion", "kappa_index", "series_hash", "operator",
)
EMPTY = "-"


class ResultRecord(BaseModel):
    """Everything computed for one input polytope"""
    id: str
    status: str = "ok"
    accepted: Optional[bool] = None
    vert: Optional[int] = None
    rk: Optional[int] = None
    sq: Optional[int] = None
    dp: Optional[int] = None
    py: Optional[int] = None
    deg: Optional[int] = None
    h21: Optional[int] = None
    b2: Optional[int] = None
    torsion: List[int] = Field(default_factory=list)
    kappa_index: Optional[int] = None
    series_hash: Optional[str] = None
    operator: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.status.startswith("error")


def compute_record(
    id: str,
    delta_star: Polytope,
    max_degree: Optional[int] = None,
    with_fit: bool = False,
) -> ResultRecord:
    """
    Build the record of one polytope

    Rejected polytopes get status "rejected"; library errors are caught and
    reported as status "error:<ErrorClass>" so one bad block never stops a run.

    Args:
        id: Label of the block
        delta_star: Input polytope
        max_degree: Hash Phi_0 up to this degree (None skips the series)
        with_fit: Also fit the D3 operator (needs the series to degree 4J + 9)
    """
    try:
        analysis = analyze(delta_star, id=id)
    except NotAcceptedError:
        return ResultRecord(id=id, status="rejected", accepted=False)
    except ConifoldError as exc:
        logger.warning("%s: %s: %s", id, type(exc).__name__, exc)
        return ResultRecord(id=id, status=f"error:{type(exc).__name__}")

    inv = analysis.record
    record = ResultRecord(
        id=id,
        accepted=True,
        vert=inv.vert,
        rk=inv.rk,
        sq=inv.sq,
        dp=inv.dp,
        py=inv.py,
        deg=inv.deg,
        h21=inv.h21,
        b2=inv.b2,
        torsion=inv.torsion,
        kappa_index=inv.kappa_index,
    )
    if max_degree is None and not with_fit:
        return record

    top = max(max_degree or 0, FIT_MIN_DEGREE) if with_fit else max_degree
    try:
        series = phi0(relation_lattice(delta_star), top)
        if max_degree is not None:
            record.series_hash = series_hash(series.truncated(max_degree))
        if with_fit:
            record.operator = operator_to_text(fit(series).operator)
    except NoOperatorError as exc:
        logger.warning("%s: %s", id, exc)
        record.status = "no-operator"
    except ConifoldError as exc:
        logger.warning("%s: %s: %s", id, type(exc).__name__, exc)
        record.status = f"error:{type(exc).__name__}"
    return record


VERDICT_COLUMNS = (
    "id", "reflexive", "k", "divisible_by_2", "triangles", "parallelograms", "other", "faces_ok", "accepted",
)


class VerdictRow(BaseModel):
    """Conifold verdict of one input polytope"""
    id: str
    reflexive: bool
    k: Optional[int] = None
    divisible_by_2: Optional[bool] = None
    triangles: Optional[int] = None
    parallelograms: Optional[int] = None
    other: Optional[int] = None
    faces_ok: Optional[bool] = None
    accepted: bool = False


def verdict_row(id: str, delta_star: Polytope) -> VerdictRow:
    """Run both conditions; a non-reflexive input is a verdict, not an error"""
    try:
        verdict = check_conditions(delta_star)
    except (OriginNotInteriorError, DualNotLatticeError) as exc:
        logger.info("%s: not reflexive (%s)", id, exc)
        return VerdictRow(id=id, reflexive=False)
    return VerdictRow(
        id=id,
        reflexive=True,
        k=verdict.divisibility.k,
        divisible_by_2=verdict.divisible_by_2,
        triangles=verdict.count(FaceKind.UNIMODULAR_TRIANGLE),
        parallelograms=verdict.count(FaceKind.UNIT_PARALLELOGRAM),
        other=verdict.count(FaceKind.OTHER),
        faces_ok=verdict.faces_ok,
        accepted=verdict.accepted,
    )


def _cell(value) -> str:
    if value is None:
        return EMPTY
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return ",".join(str(v) for v in value) or EMPTY
    return str(value)


def to_tsv(records: Sequence[BaseModel], columns: Sequence[str] = COLUMNS) -> str:
    lines = [RECORD_HEADER, "\t".join(columns)]
    for record in records:
        lines.append("\t".join(_cell(getattr(record, c)) for c in columns))
    return "\n".join(lines) + "\n"


def to_json_lines(records: Sequence[BaseModel]) -> str:
    return "".join(record.model_dump_json() + "\n" for record in records)


def render(records: Sequence[BaseModel], fmt: str = "tsv", columns: Sequence[str] = COLUMNS) -> str:
    if fmt == "tsv":
        return to_tsv(records, columns)
    if fmt == "json-lines":
        return to_json_lines(records)
    raise ValueError(f"unknown format {fmt!r}")


def read_tsv(text: str) -> List[ResultRecord]:
    """
    Parse records written by to_tsv

    Raises:
        ValueError: on a missing or different header version
    """
    lines = [line for line in text.splitlines() if line]
    if not lines or lines[0] != RECORD_HEADER:
        raise ValueError(f"expected header {RECORD_HEADER!r}")
    columns = lines[1].split("\t")
    records = []
    for line in lines[2:]:
        raw = dict(zip(columns, line.split("\t")))
        values = {}
        for name, cell in raw.items():
            if cell == EMPTY:
                continue
            if name == "accepted":
                values[name] = cell == "yes"
            elif name == "torsion":
                values[name] = [int(x) for x in cell.split(",")]
            else:
                values[name] = cell
        records.append(ResultRecord(**values))
    return records
