"""Command-line interface: subcommands, output formats, exit codes."""

import csv
import io
import json

import pytest

from knotct.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_text(capsys):
    code, out, _ = run(capsys, "invariants", "P(1,1,1)")
    assert code == 0
    assert "a2 = 1" in out
    assert "genus = 1" in out


def test_invariants_json(capsys):
    code, out, _ = run(capsys, "invariants", "DT(2,4)", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["a2"] == 2 and d["genus"] == 2
    assert d["method"]["a2"] == "closed_form"


def test_invariants_method_choice(capsys):
    code, out, _ = run(capsys, "invariants", "P(1,1,1)", "--method", "skein", "--json")
    assert code == 0
    assert json.loads(out)["method"]["a2"] == "skein_engine"


def test_invariants_closed_without_formula_fails(capsys):
    code, _, err = run(capsys, "invariants", "M(1/2,1/3,1/3)", "--method", "closed")
    assert code == 1
    assert "error" in err


def test_obstruct_json(capsys):
    code, out, _ = run(capsys, "obstruct", "P(-1,1,1)", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["verdict"] == "no_pcs" and d["fired_rule"] == "genus_ne_2"


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "invariants", "Q(1,2)")
    assert code == 2 and "error" in err


def test_validation_error_exit_code(capsys):
    code, _, err = run(capsys, "enumerate", "--family", "nope", "--bound", "1")
    assert code == 2 and "error" in err


def test_enumerate_text(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "e3", "--bound", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert "FAM:e3(a=1)" in lines
    assert any("mirror=1" in ln for ln in lines)


def test_enumerate_csv(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "e3", "--bound", "1", "--csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows and rows[0]["family"] == "e3"
    for row in rows:
        assert row["verdict"] in ("no_pcs", "inconclusive")
        assert row["fired_rule"]


def test_verify_suite_output(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "signatures")
    assert code == 0
    assert all(ln.startswith("ok") for ln in out.strip().splitlines())


def test_twists(capsys):
    code, out, _ = run(capsys, "twists", "P(3,5,1)")
    assert code == 0
    assert "3 twist regions" in out


def test_classify_writes_csv(tmp_path, capsys):
    target = tmp_path / "out.csv"
    code, out, _ = run(
        capsys, "classify-genus2", "--scope", "fig1", "--bound", "1", "--csv", str(target)
    )
    assert code == 0
    assert "survivors" in out
    rows = list(csv.DictReader(target.open()))
    assert rows
    survivors = [r for r in rows if r["verdict"] == "inconclusive"]
    assert len(survivors) == 8
    for r in survivors:
        assert r["a2"] == "0" and r["fired_rule"] == "none"
