"""
Command-line surface: exit codes, output formats and determinism
"""
import json

from cli.main import main
from cli.records import COLUMNS, read_tsv
from config import RECORD_HEADER

NOT_REFLEXIVE_TEXT = """# lopsided
4 5
1 0 0 0 -3
0 1 0 0 -1
0 0 1 0 -1
0 0 0 1 -1
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_series_of_v1(capsys, v1_file):
    code, out, _ = run(capsys, "series", str(v1_file), "--max-degree", "8")
    assert code == 0
    assert out.splitlines() == [
        "# id\tdegree\tnumerator\tdenominator",
        "V(1)\t0\t1\t1",
        "V(1)\t4\t24\t1",
        "V(1)\t8\t2520\t1",
    ]


def test_series_methods_agree(capsys, v23_file):
    _, default, _ = run(capsys, "series", str(v23_file), "--max-degree", "6")
    _, lattice, _ = run(capsys, "series", str(v23_file), "--max-degree", "6", "--method", "lattice")
    assert default == lattice


def test_multi_series_prints_the_kappa_form(capsys, v1_file):
    code, out, _ = run(capsys, "series", str(v1_file), "--max-degree", "8", "--multi")
    assert code == 0
    assert "# V(1) kappa = 4*t1" in out
    assert "V(1)\t2\t2520\t1" in out


def test_series_json_lines(capsys, v1_file):
    _, out, _ = run(capsys, "series", str(v1_file), "--max-degree", "4", "--format", "json-lines")
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows == [
        {"id": "V(1)", "degree": [0], "numerator": 1, "denominator": 1},
        {"id": "V(1)", "degree": [4], "numerator": 24, "denominator": 1},
    ]


def test_check_rejects_the_cube_with_status_zero(capsys, cube_file):
    code, out, _ = run(capsys, "check", str(cube_file))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == RECORD_HEADER
    assert lines[2] == "cube\tyes\t1\tno\t0\t0\t24\tno\tno"


def test_check_reports_non_reflexive_input(capsys, tmp_path):
    path = tmp_path / "lopsided.poly"
    path.write_text(NOT_REFLEXIVE_TEXT)
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0
    assert out.splitlines()[2] == "lopsided\tno\t-\t-\t-\t-\t-\t-\tno"


def test_invariants_tsv(capsys, v1_file):
    code, out, _ = run(capsys, "invariants", str(v1_file))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == RECORD_HEADER
    assert lines[1] == "\t".join(COLUMNS)
    assert lines[2] == "V(1)\tok\tyes\t5\t0\t0\t0\t1\t64\t0\t1\t-\t4\t-\t-"


def test_invariants_read_back(capsys, v23_file):
    _, out, _ = run(capsys, "invariants", str(v23_file), "--max-degree", "10")
    (record,) = read_tsv(out)
    assert (record.id, record.deg, record.h21, record.b2) == ("V(23)", 22, 0, 1)
    assert record.accepted
    assert len(record.series_hash) == 64


def test_invariants_json_lines(capsys, v1_file, cube_file):
    text = v1_file.read_text() + "\n" + cube_file.read_text()
    path = v1_file.parent / "both.poly"
    path.write_text(text)
    code, out, _ = run(capsys, "invariants", str(path), "--format", "json-lines")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["id"] for r in rows] == ["V(1)", "cube"]
    assert rows[0]["deg"] == 64
    assert rows[1]["status"] == "rejected"
    assert rows[1]["accepted"] is False


def test_invariants_with_fit(capsys, v1_file):
    _, out, _ = run(capsys, "invariants", str(v1_file), "--fit", "--format", "json-lines")
    row = json.loads(out)
    assert row["operator"].startswith("0:0,0,0,1;1:0,0,0,0;")
    assert row["operator"].endswith("4:-1536,-2816,-1536,-256")


def test_invariants_failure_exits_one(capsys, tmp_path):
    path = tmp_path / "lopsided.poly"
    path.write_text(NOT_REFLEXIVE_TEXT)
    code, out, err = run(capsys, "invariants", str(path))
    assert code == 1
    assert "lopsided\terror:" in out
    assert "error: ComputationError:" in err


def test_out_option_writes_the_file(capsys, v1_file, tmp_path):
    target = tmp_path / "records.tsv"
    code, out, _ = run(capsys, "invariants", str(v1_file), "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text().startswith(RECORD_HEADER)


def test_reruns_are_byte_identical(capsys, v23_file):
    _, first, _ = run(capsys, "invariants", str(v23_file), "--max-degree", "8")
    _, second, _ = run(capsys, "invariants", str(v23_file), "--max-degree", "8")
    assert first == second


def test_scan_keeps_accepted_blocks_verbatim(capsys, v1_file, cube_file):
    path = v1_file.parent / "mixed.poly"
    path.write_text(cube_file.read_text() + "\n" + v1_file.read_text())
    code, out, _ = run(capsys, "scan", str(path))
    assert code == 0
    assert out == v1_file.read_text()


def test_worker_count_does_not_change_output(capsys, v1_file, v23_file, cube_file):
    path = v1_file.parent / "three.poly"
    path.write_text("\n".join(f.read_text() for f in (v1_file, cube_file, v23_file)))
    _, serial, _ = run(capsys, "check", str(path), "--jobs", "1")
    _, parallel, _ = run(capsys, "check", str(path), "--jobs", "2")
    assert serial == parallel
    assert [line.split("\t")[0] for line in serial.splitlines()[2:]] == ["V(1)", "cube", "V(23)"]


def test_fitd3_on_v23(capsys, v23_file):
    code, out, _ = run(capsys, "fitd3", str(v23_file))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "# V(23)"
    assert lines[1].startswith("operator: D^3 + t*(-4*D^3 - 6*D^2 - 2*D) + t^2*(")
    assert lines[3:8] == ["matrix:", "  0 24 198 880", "  1 2 44 198", "  0 1 2 24", "  0 0 1 0"]
    assert lines[-1] == "annihilation: ok through t^20"


def test_fitd3_keeps_going_after_a_failed_block(capsys, monkeypatch, tmp_path, v1_file, v23_file):
    import cli.main
    from d3 import fit
    from errors import NoOperatorError

    calls = []

    def flaky_fit(series, *args):
        calls.append(series)
        if len(calls) == 1:
            raise NoOperatorError("no D3 operator with tail degree 4 fits the first 28 coefficients")
        return fit(series, *args)

    monkeypatch.setattr(cli.main, "fit", flaky_fit)
    both = tmp_path / "both.poly"
    both.write_text(v1_file.read_text() + "\n" + v23_file.read_text())
    code, out, err = run(capsys, "fitd3", str(both))
    assert code == 1
    lines = out.splitlines()
    assert lines[:2] == ["# V(1)", "fit: FAILED (NoOperatorError: no D3 operator with tail degree 4 fits the first 28 coefficients)"]
    assert "# V(23)" in lines
    assert lines[-1] == "annihilation: ok through t^20"
    assert "V(1)" in err and "V(23)" not in err

    code, out, _ = run(capsys, "fitd3", str(both), "--format", "json-lines")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert [r["id"] for r in rows] == ["V(1)", "V(23)"]


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--ids", "V(1),V(3),V(23)")
    assert code == 0
    assert "  [OK] V(3)" in out
    assert "Passed:         3/3" in out


def test_verify_reports_a_corrupted_entry(capsys, by_id, tmp_path):
    from dataset import format_polytope

    good = by_id["V(1)"]
    bad = by_id["V(3)"]
    text = format_polytope(good.polytope(), good.id, ["expect: deg=64 h21=0 rk=0 sq=0 dp=0 py=1 vert=5 type=4,2"])
    text += "\n" + format_polytope(bad.polytope(), bad.id, ["expect: deg=16 h21=10 rk=3 sq=6 dp=11 py=0 vert=8 type=2,2"])
    path = tmp_path / "corrupt.poly"
    path.write_text(text)
    code, out, _ = run(capsys, "verify", "--dataset", str(path))
    assert code == 1
    assert "  [OK] V(1)" in out
    assert "  [FAIL] V(3): dp: expected 11, computed 12" in out
    assert "Passed:         1/2" in out


def test_usage_errors_exit_two(capsys):
    assert main([]) == 2
    assert main(["transmogrify"]) == 2
    assert main(["series", "x.poly", "--max-degree", "many"]) == 2
    capsys.readouterr()


def test_missing_file_exits_one(capsys, tmp_path):
    code, _, err = run(capsys, "check", str(tmp_path / "absent.poly"))
    assert code == 1
    assert "error: FileNotFoundError" in err


def test_malformed_file_exits_one(capsys, tmp_path):
    path = tmp_path / "broken.poly"
    path.write_text("4 5\n1 0 0 0\n")
    code, _, err = run(capsys, "check", str(path))
    assert code == 1
    assert "EntryCountMismatchError" in err
    assert "line 2" in err
