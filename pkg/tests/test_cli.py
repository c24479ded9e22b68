from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from tabsieve.cli import EXIT_FAIL, EXIT_PARSE, EXIT_PRECONDITION, main
from tabsieve.tableaux import parse_tableau


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def lines(text):
    return text.strip().splitlines()


def test_enumerate_examples():
    code, text = run("enumerate", "ssyt", "--shape", "2,1", "--content", "1,1,1")
    assert code == 0 and lines(text) == ["1,2/3", "1,3/2", "count 2"]
    code, text = run("enumerate", "ribbon", "--shape", "2,2", "--r", "2", "--content", "1,1")
    assert code == 0 and lines(text)[-1] == "count 2"
    code, text = run("enumerate", "pytab", "--shape", "1,1,1", "--mu", "1", "--n", "3")
    assert code == 0 and lines(text) == ["1/2/3", "count 1"]


def test_enumerate_other_kinds():
    code, text = run("enumerate", "eytab", "--shape", "2,2", "--mu", "2")
    assert code == 0 and lines(text) == ["1,1/2,2", "count 1"]
    code, text = run("enumerate", "yamdomino", "--shape", "2,2", "--content", "1,1")
    assert code == 0 and lines(text)[-1] == "count 1"
    code, text = run("enumerate", "ssyt", "--shape", "2,2", "--inner", "1", "--content", "2,1")
    assert code == 0 and lines(text) == [".,1/1,2", "count 1"]


def test_enumerated_tableaux_reparse():
    code, text = run("enumerate", "ssyt", "--shape", "3,2,1", "--content", "2,2,1,1")
    items = lines(text)[:-1]
    assert code == 0 and len(items) == int(lines(text)[-1].split()[1])
    for item in items:
        assert str(parse_tableau(item)) == item


def test_coeff_examples():
    assert run("coeff", "plethysm", "--k", "2", "--mu", "1") == (0, "+1*[2] -1*[1,1]\n")
    assert run("coeff", "lr", "--mu", "2,1", "--nu", "2,1", "--lam", "3,2,1") == (0, "2\n")
    assert run("coeff", "plethysm", "--k", "1", "--mu", "3,1") == (0, "+1*[3,1]\n")
    assert run("coeff", "product", "--mu", "1", "--nu", "1") == (0, "+1*[2] +1*[1,1]\n")
    assert run("coeff", "phi", "--k", "2", "--lam", "2,1") == (0, "0\n")
    assert run("coeff", "pleth-coeff", "--n", "2", "--d", "1", "--mu", "2",
               "--lam", "3,1") == (0, "-1\n")


def test_apply_examples():
    assert run("apply", "evacuate", "--s", "3", "--tab", "1,2/3") == (0, "1,3/2\n")
    assert run("apply", "e", "--i", "1", "--tab", "1,1") == (0, "VANISH\n")
    assert run("apply", "promote", "--s", "4", "--tab", "1,3/2,4") == (0, "1,2/3,4\n")
    assert run("apply", "demote", "--s", "4", "--tab", "1,2/3,4") == (0, "1,3/2,4\n")
    assert run("apply", "f", "--i", "1", "--tab", "1,1") == (0, "1,2\n")
    assert run("apply", "rectify", "--tab", ".,1/1,2") == (0, "1,1/2\n")


def test_verify_examples(capsys):
    code, text = run("verify", "mainevac", "--max-weight", "8", "--m", "2")
    assert code == 0
    reports = [json.loads(x) for x in lines(text)]
    assert reports and all(r["pass"] for r in reports)
    code, _ = run("verify", "mainprom", "--n", "2", "--max-weight", "8")
    assert code == 0
    code, _ = run("verify", "all", "--max-weight", "4")
    assert code == 0
    assert "0 failed" in capsys.readouterr().err


def test_verify_formats_and_output_file(tmp_path):
    code, text = run("verify", "stembridge", "--max-weight", "4", "--format", "tsv")
    assert code == 0
    rows = lines(text)
    assert rows[0].split("\t") == ["theorem", "inputs", "lhs", "rhs", "sign", "pass"]
    assert all(r.endswith("\tpass") for r in rows[1:])
    code, text = run("verify", "stembridge", "--max-weight", "4", "--format", "text")
    assert code == 0 and all(x.startswith("pass ") for x in lines(text))
    target = tmp_path / "reports.jsonl"
    code, text = run("verify", "rhoades", "--max-weight", "4", "--output", str(target))
    assert code == 0 and text == ""
    assert all(json.loads(x)["pass"] for x in target.read_text().splitlines())


def test_verify_config_file(tmp_path):
    cfg = tmp_path / "bounds.cfg"
    cfg.write_text("max_weight=4\nm=1\nn=2\npadded=true\n")
    code, text = run("verify", "mainprom", "--config", str(cfg), "--format", "text")
    assert code == 0
    assert "lam=2;mu=1;m=1;n=2;d=1" in text


def test_output_is_deterministic():
    args = ("verify", "all", "--max-weight", "4")
    assert run(*args) == run(*args)
    args = ("enumerate", "ssyt", "--shape", "3,2", "--content", "2,2,1")
    assert run(*args) == run(*args)


@pytest.mark.parametrize("argv", [
    ("enumerate", "ssyt", "--shape", "2,x", "--content", "1"),
    ("coeff", "lr", "--mu", "1,2", "--nu", "1", "--lam", "2"),
    ("apply", "promote", "--tab", "1,2"),
    ("apply", "e", "--tab", "2,1", "--i", "1"),
    ("verify", "mainevac", "--m", "one"),
])
def test_parse_failures_exit_2(argv, capsys):
    assert run(*argv)[0] == EXIT_PARSE


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"], out=io.StringIO())
    assert exc.value.code == EXIT_PARSE


@pytest.mark.parametrize("argv", [
    ("enumerate", "ssyt", "--shape", "2,1", "--content", "1,1"),
    ("enumerate", "ribbon", "--shape", "2,1", "--r", "2", "--content", "1"),
    ("coeff", "pleth-coeff", "--n", "3", "--d", "2", "--mu", "1", "--lam", "2,1"),
    ("apply", "demote", "--s", "2", "--tab", "1,3"),
    ("apply", "e", "--i", "3", "--s", "3", "--tab", "1,2"),
    ("verify", "mainevac", "--config", "/nonexistent/bounds.cfg"),
])
def test_precondition_failures_exit_3(argv, capsys):
    assert run(*argv)[0] == EXIT_PRECONDITION


def test_failed_report_exits_1(monkeypatch):
    from tabsieve import verify
    bad = verify.VerificationReport("mainevac", (), 1, 2, 1)
    monkeypatch.setattr(verify, "run_sweep", lambda theorems, bounds: [bad])
    assert run("verify", "mainevac")[0] == EXIT_FAIL


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tabsieve", "coeff", "plethysm", "--k", "2",
                           "--mu", "2"], capture_output=True, text=True, check=True)
    assert proc.stdout == "+1*[4] -1*[3,1] +1*[2,2]\n"
