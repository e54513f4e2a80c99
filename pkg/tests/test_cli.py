from pathlib import Path

import pytest

from f1cong.cli import main

GOLDEN = Path(__file__).parent.parent / "golden"

CASES = [
    ("e_idempotent.parse.txt", ["parse", "e_idempotent.f1"], 0),
    ("e_idempotent.mspec.txt", ["mspec", "e_idempotent.f1"], 0),
    ("e_idempotent.cong.txt", ["cong", "e_idempotent.f1"], 0),
    ("e_idempotent.cong.json", ["--json", "cong", "e_idempotent.f1"], 0),
    ("e_idempotent.mspec.dot", ["--dot", "mspec", "e_idempotent.f1"], 0),
    ("e_idempotent.check.txt", ["check", "e_idempotent.f1"], 0),
    ("e_idempotent.sred.txt", ["sred", "e_idempotent.f1"], 0),
    ("valuative.check.txt", ["check", "valuative.f1"], 1),
    ("valuative.lift_Da.txt", ["lift", "valuative.f1", "Da"], 0),
    ("valuative.lift_Dp.json", ["--json", "lift", "valuative.f1", "Dp"], 0),
]


@pytest.mark.parametrize("expected,args,code", CASES, ids=[c[0] for c in CASES])
def test_golden_output(expected, args, code, capsys):
    args = [str(GOLDEN / a) if a.endswith(".f1") else a for a in args]
    assert main(args) == code
    assert capsys.readouterr().out == (GOLDEN / "expected" / expected).read_text()


def test_single_property(capsys):
    f = str(GOLDEN / "valuative.f1")
    assert main(["check", f, "separated", "a"]) == 0
    assert main(["check", f, "universally_closed", "a"]) == 1
    assert "no (counterexample" in capsys.readouterr().out


def test_errors_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.f1"
    bad.write_text("monoid E = table { elements e; e*e = ; }\n")
    assert main(["parse", str(bad)]) == 2
    assert "line 1, column 38" in capsys.readouterr().err
    assert main(["parse", str(tmp_path / "missing.f1")]) == 2
    assert main(["mspec", str(GOLDEN / "e_idempotent.f1"), "nope"]) == 2
    assert main(["frobnicate"]) == 2


def test_corpus_verify(capsys):
    assert main(["corpus-verify"]) == 0
    out = capsys.readouterr().out
    assert "BAD" not in out and out.count("ok ") >= 20


def test_symbolic_cong_listing(tmp_path, capsys):
    f = tmp_path / "a2.f1"
    f.write_text("monoid A = free(t1, t2)\n")
    assert main(["--radius", "1", "cong", str(f)]) == 0
    out = capsys.readouterr().out
    assert "p_{12,0}" in out and "p_{∅,Z^2}" in out
