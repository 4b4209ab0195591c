import csv
from fractions import Fraction
import io
import json
import subprocess
import sys

import pytest

from hurwitz.cli import main
from hurwitz.recursion import load_table
from hurwitz.partitions import make_partition


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_compute_text_agreement():
    code, text = run("compute", "-g", "0", "-p", "2,1", "--method", "closed,recursion,dfs,sieve,graph")
    assert code == 0
    assert "agreement: yes" in text
    assert "G = 4  c = 8" in text
    assert text.rstrip().splitlines()[-1].startswith("# elapsed")


def test_compute_json_round_trip():
    code, text = run("compute", "-g", "1", "-p", "2", "--method", "closed,recursion,dfs", "--format", "json")
    assert code == 0
    payload = json.loads(text)
    assert payload == {
        "genus": 1, "partition": [2], "r": 3,
        "values": {"closed": "1/2", "recursion": "1/2", "dfs": "1/2"},
        "agreement": True,
    }


def test_compute_genus2():
    code, text = run("compute", "-g", "2", "-p", "1,1,1", "--method", "recursion,sieve", "--format", "json")
    assert code == 0
    assert json.loads(text)["values"] == {"conjecture": "2184", "sieve": "2184"}


def test_compute_labelled_genus2_reports_mismatch():
    code, text = run("compute", "-g", "2", "-p", "1,1,1", "--method", "conjecture,sieve",
                     "--normalization", "labelled", "--no-timing")
    assert code == 1
    assert "agreement: NO" in text


@pytest.mark.parametrize("argv", [
    ["compute", "-g", "2", "-p", "2,1"],
    ["compute", "-g", "0", "-p", "2,0"],
    ["compute", "-g", "3", "-p", "1"],
    ["compute", "-g", "0", "-p", "2", "--method", "magic"],
    ["compute", "-g", "0", "-p", "1,1,1,1,1", "--method", "dfs", "--budget", "10"],
    ["pde-check", "-g", "0", "-D", "0"],
    ["table", "-g", "2", "--dmax", "3"],
    ["verify", "--dmax", "2", "--suite", "nope"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_table_csv_default():
    code, text = run("table", "-g", "0", "--dmax", "2")
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows == [["d", "partition", "r", "G", "c"], ["1", "1", "0", "1", "1"],
                    ["2", "2", "1", "1/2", "1"], ["2", "1,1", "2", "1", "1"]]


def test_table_genus1_first_row():
    code, text = run("table", "-g", "1", "--dmax", "3", "--format", "json")
    assert code == 0
    rows = json.loads(text)
    assert rows[0] == {"d": 1, "partition": "1", "r": 2, "G": "0", "c": 0}
    assert {"d": 3, "partition": "3", "r": 4, "G": "9", "c": 27} in rows


def test_table_routes_agree():
    closed = run("table", "-g", "1", "--dmax", "6", "--format", "json")[1]
    recursive = run("table", "-g", "1", "--dmax", "6", "--format", "json", "--method", "recursion")[1]
    assert closed == recursive


def test_table_text_is_deterministic_without_timing():
    first = run("table", "-g", "0", "--dmax", "5", "--format", "text", "--no-timing")
    second = run("table", "-g", "0", "--dmax", "5", "--format", "text", "--no-timing")
    assert first == second
    assert "elapsed" not in first[1]


def test_verify_all_small():
    code, text = run("verify", "--dmax", "4", "--suite", "all", "--no-timing")
    assert code == 0
    assert "FAIL " not in text
    assert text.rstrip().splitlines()[-1].startswith("pass:")


def test_verify_json_counts():
    code, text = run("verify", "--dmax", "3", "--suite", "closed-recursion,geotree", "--format", "json")
    assert code == 0
    payload = json.loads(text)
    assert payload["passed"] is True
    assert payload["counts"] == {"PASS": 2 * 2 * 6, "FAIL": 0, "SKIP": 0}


def test_verify_budget_cells_are_skipped_not_failed():
    code, text = run("verify", "--dmax", "4", "--suite", "closed-dfs", "--budget", "1000", "--format", "json")
    assert code == 0
    counts = json.loads(text)["counts"]
    assert counts["SKIP"] > 0 and counts["FAIL"] == 0


def test_pde_check():
    code, text = run("pde-check", "-g", "1", "-D", "4", "--no-timing")
    assert code == 0
    assert text == "residual: 0 monomials\n"
    code, text = run("pde-check", "-g", "0", "-D", "3", "--format", "json", "--method", "recursion")
    assert json.loads(text) == {"genus": 0, "D": 3, "residual": [], "ok": True}


def test_genus2_command():
    code, text = run("genus2", "--dmax", "3", "--no-timing")
    assert code == 0
    assert text.splitlines() == [
        "d=1: 0 (sieve: 0, match)",
        "d=2: 1 (sieve: 1, match)",
        "d=3: 2184 (sieve: 2184, match)",
    ]
    assert run("genus2", "--dmax", "3", "--normalization", "labelled", "--no-timing")[0] == 1


def test_cache_file_is_written_and_reused(tmp_path):
    path = tmp_path / "memo.txt"
    code, _ = run("table", "-g", "1", "--dmax", "4", "--method", "recursion", "--cache", str(path))
    assert code == 0
    table = load_table(path)
    assert table.entries[(1, make_partition([2]))] == Fraction(1, 2)
    assert run("table", "-g", "1", "--dmax", "4", "--method", "recursion", "--cache", str(path))[0] == 0


def test_cache_file_corrupt(tmp_path):
    path = tmp_path / "memo.txt"
    path.write_text("garbage\n")
    assert run("table", "-g", "0", "--dmax", "2", "--method", "recursion", "--cache", str(path))[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hurwitz", "compute", "-g", "0", "-p", "1,1", "--no-timing"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "agreement: yes" in proc.stdout
