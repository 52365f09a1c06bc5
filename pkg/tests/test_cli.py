import io
import json
import subprocess
import sys

import pytest

from lambertkit.harness.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_coeff_exact():
    assert run("coeff", "lambert(phi)", "7") == (0, "7\n")
    assert run("coeff", "1/(1-2*q)/3", "2") == (0, "4/3\n")


def test_coeff_loglinear_format():
    code, out = run("coeff", "lambert(vonmangoldt)", "6")
    assert code == 0 and out == "(1)·log 2 + (1)·log 3\n"


def test_series_lines():
    code, out = run("series", "lambert(one)", "--order", "4")
    assert code == 0
    assert out.splitlines() == ["0\t0", "1\t1", "2\t2", "3\t2", "4\t3"]


@pytest.mark.parametrize("argv", [
    ("coeff", "lambert(", "3"),
    ("coeff", "nosuch(1)", "3"),
    ("series", "1/q", "--order", "3"),
    ("coeff", "q", "-1"),
    ("verify", "--catalog", "/nonexistent/x.cat"),
    ("verify", "--id", "NOPE"),
])
def test_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert capsys.readouterr().err.startswith("error:")


def test_verify_selected_ids():
    code, out = run("verify", "--id", "C2", "--id", "R6")
    assert code == 0
    assert "C2" in out and "R6" in out and "2 records" in out


def test_verify_mismatch_exits_1(tmp_path):
    cat = tmp_path / "c.cat"
    cat.write_text("[Z] anchor=a quote=b lhs='lambert(mu)' rhs='q' expected=erratum\n")
    code, out = run("verify", "--catalog", str(cat))
    assert code == 1
    assert "Z (erratum -> verified)" in out


def test_report_json_fields(tmp_path):
    cat = tmp_path / "c.cat"
    cat.write_text("[Z] anchor=a quote=b lhs='q' rhs='2*q' reading1.rhs='q' expected=erratum\n")
    code, out = run("report", "--catalog", str(cat), "--format", "json", "--no-timing")
    assert code == 0
    row = json.loads(out)["records"][0]
    assert list(row) == ["id", "status", "order", "mismatch_index", "mismatch_lhs", "mismatch_rhs", "reading", "ms"]
    assert row["mismatch_index"] == 1 and row["reading"] == 1 and row["ms"] is None


def test_report_writes_files(tmp_path):
    cat = tmp_path / "c.cat"
    cat.write_text("[Z] anchor=a quote=b lhs='q' rhs='2*q' reading1.rhs='q' expected=erratum\n"
                   "[Y] anchor=a quote=b lhs='lambert(mu)' rhs='q'\n")
    out_dir = tmp_path / "out"
    code, text = run("report", "--catalog", str(cat), "--format", "md", "--out", str(out_dir))
    assert code == 0 and text.startswith("| id |")
    for name in ("report.md", "report.csv", "status_counts.png", "errata.png"):
        assert (out_dir / name).stat().st_size > 0
    assert (out_dir / "report.csv").read_text().splitlines()[0] == \
        "id,status,order,mismatch_index,mismatch_lhs,mismatch_rhs,reading,ms"


def test_bench_command(tmp_path):
    code, out = run("bench", "--sizes", "1,200", "--out", str(tmp_path))
    assert code == 0
    assert out.count("True") == 6
    assert (tmp_path / "bench.png").is_file()


def test_bench_custom_function():
    code, out = run("bench", "--sizes", "50", "--function", "mu")
    assert code == 0 and out.count("True") == 3


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lambertkit", "coeff", "lambert(mu)", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1\n"
