from __future__ import annotations

import pytest

from rankcode.cli import main, run_command
from rankcode.formats import format_code
from rankcode.field import field_new
from rankcode.mrd import gabidulin_code

CODE = "field N=4\ncode n=4 k=2\nrow 1 2 4 8\nrow 1 4 3 c\n"


@pytest.fixture
def code_file(tmp_path):
    p = tmp_path / "c.txt"
    p.write_text(CODE)
    return str(p)


def run(*argv):
    return run_command(list(argv))


def test_field_info():
    code, out = run("field", "info", "--N", "4")
    assert code == 0 and "x^4+x+1" in out


def test_code_analyze(code_file):
    code, out = run("code", "analyze", "--file", code_file, "--tsv")
    assert code == 0
    summary = out.split("\n\n")[0]
    rows = dict(line.split("\t") for line in summary.splitlines()[1:])
    assert rows["d"] == "3" and rows["mrd"] == "yes"


def test_mrd_spectrum_output():
    code, out = run("mrd", "spectrum", "--N", "4", "--n", "4", "--k", "2", "--tsv")
    assert code == 0
    assert out.splitlines()[-1] == "total\t256"


def test_mrd_new_is_parseable(tmp_path):
    code, out = run("mrd", "new", "--N", "4", "--n", "3", "--k", "2")
    assert code == 0
    assert out + "\n" == format_code(gabidulin_code(field_new(4), 3, 2))


def test_circulant_norm():
    code, out = run("circulant", "norm", "--N", "4", "--poly", "1+x", "--tsv")
    assert code == 0 and "norm_rank\t3" in out


def test_extremal_exact():
    code, out = run("extremal", "a", "--N", "3", "--n", "3", "--r", "1", "--d", "2", "--exact", "--tsv")
    assert code == 0 and "\t7" in out


def test_fuzzy_decode(code_file):
    code, out = run("fuzzy", "decode", "--code", code_file, "--word", "1", "2", "4", "9")
    assert code == 0 and out


def test_verify_suite_is_reproducible():
    a = run("verify", "--suite", "mrd")
    b = run("verify", "--suite", "mrd")
    assert a == b and a[0] == 0


def test_usage_errors(code_file, tmp_path):
    assert run("nope")[0] == 2
    assert run("code", "analyze")[0] == 2
    assert run("code", "analyze", "--file", str(tmp_path / "missing.txt"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("field N=4\ncode n=4 k=1\nrow 1 2 4\n")
    code, out = run("code", "analyze", "--file", str(bad))
    assert code == 2 and "line 3" in out


def test_budget_exit(code_file):
    code, out = run("covering", "radius", "--code", code_file, "--max-enum-bits", "8")
    assert code == 3 and "budget" in out


def test_main_streams(capsys):
    assert main(["nope"]) == 2
    assert capsys.readouterr().err
    assert main(["field", "info", "--N", "3"]) == 0
    assert "x^3" in capsys.readouterr().out
