"""
Polytope files and the bundled ground truth
"""
import pytest

from dataset import (
    GroundTruthEntry,
    expectation_issues,
    format_polytope,
    load_ground_truth,
    parse,
    parse_blocks,
)
from dataset.polyfile import block_points
from errors import (
    AmbiguousOrientationError,
    EntryCountMismatchError,
    MalformedHeaderError,
    NonIntegerTokenError,
    PolytopeFileError,
)

BUNDLED_IDS = [entry.id for entry in load_ground_truth()]

V1_ROWS_TEXT = """# V(1)
5 4
1 0 0 0
0 1 0 0
0 0 1 0
0 0 0 1
-4 -1 -1 -1
"""


# parsing

def test_empty_input():
    assert parse("") == []
    assert parse_blocks("\n\n# only a comment\n") == []


def test_three_blocks_in_order(v1, v23, v1_file, v23_file):
    text = v1_file.read_text() + "\n" + v23_file.read_text() + "\n" + "4 5\n1 0 0 0 -1\n0 1 0 0 -1\n0 0 1 0 -1\n0 0 0 1 -1\n"
    parsed = parse(text)
    assert [id for id, _ in parsed] == ["V(1)", "V(23)", "block-3"]
    assert parsed[0][1] == v1
    assert parsed[1][1] == v23


def test_parse_reads_paths(v1_file, v1):
    assert parse(v1_file) == [("V(1)", v1)]
    assert parse(str(v1_file)) == [("V(1)", v1)]


def test_malformed_header():
    with pytest.raises(MalformedHeaderError) as info:
        parse_blocks("# x\n4\n1 0 0 0\n")
    assert info.value.line == 2
    with pytest.raises(MalformedHeaderError):
        parse_blocks("four five\n")
    with pytest.raises(MalformedHeaderError):
        parse_blocks("0 5\n")


def test_entry_count_mismatch():
    with pytest.raises(EntryCountMismatchError) as info:
        parse_blocks("2 3\n1 0 -1\n0 1\n")
    assert info.value.line == 3
    with pytest.raises(EntryCountMismatchError) as info:
        parse_blocks("2 3\n1 0 -1\n")
    assert info.value.line == 3


def test_non_integer_token_reports_line_and_column():
    with pytest.raises(NonIntegerTokenError) as info:
        parse_blocks("# bad\n2 3\n1 0 x\n0 1 -1\n")
    assert (info.value.line, info.value.column) == (3, 5)
    assert "line 3, column 5" in str(info.value)


def test_file_errors_are_value_errors():
    assert issubclass(PolytopeFileError, ValueError)


def test_square_blocks_need_an_orientation():
    (block,) = parse_blocks("2 2\n1 0\n2 1\n")
    with pytest.raises(AmbiguousOrientationError):
        block_points(block)
    assert block_points(block, "rows") == [(1, 0), (2, 1)]
    assert block_points(block, "columns") == [(1, 2), (0, 1)]
    with pytest.raises(ValueError):
        block_points(block, "diagonal")


def test_row_layout_is_detected(v1):
    assert parse(V1_ROWS_TEXT) == [("V(1)", v1)]
    assert parse(V1_ROWS_TEXT, orientation="rows") == [("V(1)", v1)]


def test_format_round_trip_keeps_comments(v23, v23_file):
    text = format_polytope(v23, "V(23)", comments=["expect: deg=22"])
    (block,) = parse_blocks(text)
    assert block.id == "V(23)"
    assert block.comments == ["V(23)", "expect: deg=22"]
    assert parse(text) == [("V(23)", v23)]
    assert text == v23_file.read_text().replace("# V(23)\n", "# V(23)\n# expect: deg=22\n")


# ground truth

def test_bundled_dataset(ground_truth):
    assert len(ground_truth) == 166
    assert [e.id for e in ground_truth[:3]] == ["V(1)", "V(2)", "V(3)"]
    assert ground_truth[-1].id == "V(166)"
    assert sum(1 for e in ground_truth if e.expected.get("py") == 1) == 100


def test_bundled_expectations_are_consistent(ground_truth):
    for entry in ground_truth:
        assert expectation_issues(entry) == [], entry.id
        assert len(entry.vertices) == entry.expected["vert"], entry.id


def test_v9_erratum(by_id):
    entry = by_id["V(9)"]
    assert entry.expected["h21"] == 10
    assert entry.errata and "h21" in entry.errata[0]


@pytest.mark.parametrize("name, column, repaired", [
    ("V(3)", 7, (1, -1, 0, 0)),
    ("V(4)", 6, (1, -1, 0, 0)),
    ("V(23)", 11, (-1, -1, 0, 1)),
    ("V(24)", 10, (1, -1, 0, 0)),
    ("V(91)", 0, (-2, 1, -1, -1)),
])
def test_repaired_tables(by_id, name, column, repaired):
    entry = by_id[name]
    assert entry.errata, name
    assert entry.vertices[column] == repaired
    assert len(set(entry.vertices)) == entry.expected["vert"]


def test_repaired_tables_are_conifold(by_id):
    from conifold import check_conditions

    for name in ("V(3)", "V(4)", "V(23)", "V(24)", "V(91)"):
        assert check_conditions(by_id[name].polytope()).accepted, name


def test_type_labels(by_id):
    assert by_id["V(1)"].type_label == (4, 2)
    assert by_id["V(23)"].type_label == (1, 11)
    assert by_id["V(70)"].type_label is None
    assert by_id["V(24)"].expected_b2 == 2


def test_load_subset_keeps_file_order():
    entries = load_ground_truth(ids=["V(3)", "V(1)"])
    assert [e.id for e in entries] == ["V(1)", "V(3)"]


def test_expectation_issues_flag_inconsistent_values(by_id):
    entry = by_id["V(3)"]
    broken = entry.model_copy(update={"expected": {**entry.expected, "h21": 11, "vert": 9}})
    issues = expectation_issues(broken)
    assert any(i.startswith("vert=9") for i in issues)
    assert any(i.startswith("h21=11") for i in issues)
    bare = GroundTruthEntry(id="x", vertices=entry.vertices, expected={})
    assert expectation_issues(bare)[0].startswith("missing expectations")


def test_simplex_and_six_vertex_rank_one_entries(ground_truth):
    assert [e.id for e in ground_truth if e.expected["vert"] == 5] == ["V(1)"]
    six = [e.id for e in ground_truth if e.type_label is not None and e.expected["vert"] == 6]
    assert six == ["V(2)", "V(5)"]


@pytest.mark.slow
@pytest.mark.parametrize("name", BUNDLED_IDS)
def test_format_round_trip(by_id, name):
    P = by_id[name].polytope()
    assert parse(format_polytope(P, name)) == [(name, P)]
