import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from dascent.cli import main

GOLDEN = Path(__file__).parent / "golden"
T8_TEXT = "((8,4),((1,5),((2,3),(6,7))))"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("argv, expected", [
    (("count", "dA", "--n", "5", "--d", "2"), "118"),
    (("count", "RDT", "--n", "2"), "1"),
    (("count", "RDT", "--n", "6"), "92"),
    (("count", "dI", "--n", "8", "--d", "2"), "10404"),
    (("count", "I", "--n", "5"), "120"),
    (("count", "RGF", "--n", "6"), "203"),
    (("count", "Av_sigma", "--n", "5", "--size", "5"), "119"),
    (("count", "Av_P", "--n", "5", "--size", "5"), "119"),
    (("count", "dMtx", "--n", "4", "--d", "1"), "23"),
    (("count", "Mtx", "--n", "5"), "53"),
    (("count", "MtxPrime", "--n", "5"), "53"),
    (("count", "dMch", "--n", "4", "--d", "2"), "24"),
])
def test_count(argv, expected):
    code, out = run(*argv)
    assert code == 0 and out == expected + "\n"


def test_count_av_p_n8():
    assert run("count", "Av_P", "--n", "8", "--size", "5") == (0, "36370\n")


def test_enumerate_text_and_json():
    code, out = run("enumerate", "dA", "--n", "3", "--d", "0")
    assert code == 0
    assert out.split() == ["0,0,0", "0,0,1", "0,1,0", "0,1,1", "0,1,2"]
    code, out = run("enumerate", "RDT", "--n", "3", "--format", "json")
    assert [json.loads(line) for line in out.splitlines()][0]["children"]


@pytest.mark.parametrize("argv, expected", [
    (("map", "mx", "--d", "2", "--in", "0,1,0,3,0,4,2,0"),
     "1,0,1,1,1;0,1,0,0,0;0,0,0,0,1;0,0,0,1,0;0,0,0,0,1"),
    (("map", "mx_inverse", "--d", "2", "--in",
      "1,0,1,1,1;0,1,0,0,0;0,0,0,0,1;0,0,0,1,0;0,0,0,0,1"), "0,1,0,3,0,4,2,0"),
    (("map", "pe", "--d", "1", "--in", "0,1,0,2,2,0"), "631254"),
    (("map", "mh", "--in", "0,1,0,2"), "1-3,4-5,2-7,6-8"),
    (("map", "mh_inverse", "--in", "1-3,4-5,2-7,6-8"), "0,1,0,2"),
    (("map", "po", "--d", "2", "--in", "0,1,2,0,3,2"), "0,1,2,0,4,2"),
    (("map", "po_inverse", "--d", "2", "--in", "0,1,2,0,4,2"), "0,1,2,0,3,2"),
    (("map", "rp", "--in", "0,1,2"), "0,1,2"),
    (("map", "rp_inverse", "--in", "0,0,0"), "0,0,0"),
    (("map", "claesson", "--in", "0,1,0"), "312"),
    (("map", "rgf_matrix", "--in", "0,0,0"), "0,1,0;0,0,1;0,0,0"),
    (("map", "alpha_of_tree", "--in", T8_TEXT), "0,1,2,1,0,1,5"),
    (("map", "tree_of_alpha", "--in", "0,1,2,1,0,1,5"), "(((1,5),((2,3),(6,7))),(4,8))"),
])
def test_map(argv, expected):
    code, out = run(*argv)
    assert code == 0 and out == expected + "\n"


def test_map_json():
    code, out = run("map", "po", "--d", "2", "--in", "0,1,2,0,3,2", "--format", "json")
    data = json.loads(out)
    assert data["downmax"] == [0, 1, 2, 0, 4, 2]
    assert [1, 2] in data["covers"]


@pytest.mark.parametrize("argv", [
    ("map", "mx", "--d", "2", "--in", "0,2"),
    ("map", "pe", "--d", "1", "--in", "1"),
    ("map", "po_inverse", "--d", "2", "--in", "0,0,2,0,3"),
    ("map", "mh_inverse", "--in", "1-4,2-3"),
    ("map", "tree_of_alpha", "--in", "0,2"),
])
def test_precondition_exit_code(argv, capsys):
    code, _ = run(*argv)
    assert code == 3
    assert "precondition" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ("map", "mx", "--d", "2", "--in", "0,x"),
    ("map", "alpha_of_tree", "--in", "(1,"),
    ("map", "mx", "--in", "0,1"),
    ("count", "dA", "--n", "3"),
    ("count", "Av_P", "--n", "3"),
])
def test_usage_exit_code(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert capsys.readouterr().err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["table", "nope"])
    assert exc.value.code == 2


@pytest.mark.parametrize("which", ["dA", "dI", "av_sigma5_vs_tA", "av_P5_vs_tA"])
def test_table_matches_golden(which):
    code, out = run("table", which, "--format", "csv")
    assert code == 0
    assert out == (GOLDEN / f"{which}.csv").read_text()


def test_table_json():
    code, out = run("table", "dA", "--format", "json", "--max-n", "4", "--d", "2")
    data = json.loads(out)
    assert data["header"] == ["d\\n", "0", "1", "2", "3", "4"]
    assert data["rows"] == [["0", 1, 1, 2, 5, 15], ["1", 1, 1, 2, 6, 23],
                            ["2", 1, 1, 2, 6, 24]]


def test_table_warns_past_published_range():
    with pytest.warns(RuntimeWarning):
        run("table", "dA", "--max-n", "11", "--d", "0")


@pytest.mark.parametrize("suite, extra", [
    ("tables", ("--max-n", "10")),
    ("roundtrips", ("--max-n", "6")),
    ("genfunc", ("--order", "8")),
    ("injections", ("--max-n", "6")),
    ("involution", ("--max-n", "5")),
])
def test_verify(suite, extra):
    code, out = run("verify", suite, *extra)
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert all(r["status"] == "pass" for r in report["results"][suite])


def test_verify_exit_1_on_failure(monkeypatch):
    import dascent.verify as v
    monkeypatch.setattr(v, "PUBLISHED_DA", [[0] * 11 for _ in range(7)])
    code, out = run("verify", "tables", "--max-n", "3")
    assert code == 1 and not json.loads(out)["passed"]


def test_output_is_deterministic():
    assert run("enumerate", "Av_P", "--n", "4", "--size", "4") == \
        run("enumerate", "Av_P", "--n", "4", "--size", "4")


def test_entry_point_via_module():
    proc = subprocess.run([sys.executable, "-m", "dascent", "count", "dA", "--n", "5",
                           "--d", "2"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "118\n"
    proc = subprocess.run([sys.executable, "-m", "dascent", "map", "mx", "--d", "2",
                           "--in", "0,2"], capture_output=True, text=True, check=False)
    assert proc.returncode == 3 and "2-ascent" in proc.stderr
