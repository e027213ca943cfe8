"""
Polytope File Format
Blocks of "# id" comment lines, a "rows cols" header and an integer matrix

Columns are vertices (the layout of the printed tables). A PALP-style
header with one vertex per row is recognised when the orientation is
unambiguous.
"""
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from errors import (
    AmbiguousOrientationError,
    EntryCountMismatchError,
    MalformedHeaderError,
    NonIntegerTokenError,
)
from polytope import Polytope, hull_facets

logger = logging.getLogger(__name__)

ORIENTATIONS = ("auto", "columns", "rows")


@dataclass
class RawBlock:
    """One block as written: comments, header and body, with the header line number"""
    comments: List[str]
    rows: int
    cols: int
    matrix: List[List[int]]
    line: int
    id: Optional[str] = None
    index: int = 0

    def label(self) -> str:
        return self.id or f"block-{self.index + 1}"


def _tokens(text: str) -> List[Tuple[str, int]]:
    out = []
    col = 0
    for tok in text.split():
        col = text.index(tok, col)
        out.append((tok, col + 1))
        col += len(tok)
    return out


def _integer(tok: str, line_no: int, col: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise NonIntegerTokenError(f"non-integer token {tok!r}", line_no, col) from None


def parse_blocks(text: str) -> List[RawBlock]:
    """
    Split text into raw blocks

    Raises:
        MalformedHeaderError, EntryCountMismatchError, NonIntegerTokenError
    """
    lines = text.splitlines()
    blocks: List[RawBlock] = []
    comments: List[str] = []
    i = 0
    while i < len(lines):
        stripped = lines[i].strip()
        if not stripped:
            comments = []
            i += 1
            continue
        if stripped.startswith("#"):
            comments.append(stripped[1:].strip())
            i += 1
            continue

        header_line = i + 1
        header = _tokens(lines[i])
        if len(header) != 2:
            raise MalformedHeaderError(f"header needs two integers, got {len(header)} tokens", header_line)
        try:
            rows, cols = (int(tok) for tok, _ in header)
        except ValueError:
            raise MalformedHeaderError(f"header {stripped!r} is not two integers", header_line) from None
        if rows <= 0 or cols <= 0:
            raise MalformedHeaderError(f"header {stripped!r} has a non-positive size", header_line)

        matrix = []
        for r in range(rows):
            i += 1
            line_no = i + 1
            if i >= len(lines):
                raise EntryCountMismatchError(f"expected {rows} rows, file ended after {r}", line_no)
            entries = _tokens(lines[i])
            if len(entries) != cols:
                raise EntryCountMismatchError(f"expected {cols} entries, got {len(entries)}", line_no)
            matrix.append([_integer(tok, line_no, col) for tok, col in entries])
        i += 1

        ident = next((c for c in comments if c and ":" not in c), None)
        blocks.append(RawBlock(
            comments=comments, rows=rows, cols=cols, matrix=matrix,
            line=header_line, id=ident, index=len(blocks),
        ))
        comments = []
    return blocks


def block_points(block: RawBlock, orientation: str = "auto") -> List[Tuple[int, ...]]:
    """
    Vertex list of a block

    auto: the shorter side is the lattice dimension (columns are vertices
    when rows < cols, PALP row layout when rows > cols); square blocks need
    an explicit orientation.
    """
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}")
    if orientation == "auto":
        if block.rows == block.cols:
            raise AmbiguousOrientationError(
                f"square {block.rows}x{block.cols} block; pass an explicit orientation", block.line
            )
        orientation = "columns" if block.rows < block.cols else "rows"
    if orientation == "rows":
        return [tuple(row) for row in block.matrix]
    return [tuple(block.matrix[r][c] for r in range(block.rows)) for c in range(block.cols)]


def parse(source: Union[str, Path], orientation: str = "auto") -> List[Tuple[str, Polytope]]:
    """
    Parse a polytope file (path or text)

    Args:
        source: Path to a file, or the file contents
        orientation: "auto", "columns" or "rows"

    Returns:
        List of (id, Polytope) in file order
    """
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source and Path(source).is_file()):
        text = Path(source).read_text()
    else:
        text = source
    out = []
    for block in parse_blocks(text):
        out.append((block.label(), hull_facets(block_points(block, orientation))))
    logger.debug("parsed %d polytopes", len(out))
    return out


def format_polytope(P: Polytope, id: Optional[str] = None, comments: Sequence[str] = ()) -> str:
    """Write P as a block with one column per vertex"""
    lines = []
    if id:
        lines.append(f"# {id}")
    lines += [f"# {c}" for c in comments]
    lines.append(f"{P.dim} {P.n_vertices}")
    for r in range(P.dim):
        lines.append(" ".join(str(v[r]) for v in P.vertices))
    return "\n".join(lines) + "\n"
