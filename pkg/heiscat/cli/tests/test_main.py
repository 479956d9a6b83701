"""
Tests for the heiscat command line
==================================
Every subcommand is driven through ``main(argv)``; output is read with
capsys and reports land in tmp_path.

Run: pytest heiscat/cli/tests/test_main.py -v
"""

import json

import pytest

from heiscat.algebra.frobenius import builtin
from heiscat.cli.main import EXIT_ERROR, EXIT_OK, describe, main


# ──────────────────────────────────────────────
# validate
# ──────────────────────────────────────────────

def test_describe_clifford():
    lines = describe(builtin("clifford"))
    assert lines[0] == "clifford: dim 2"
    assert lines[1] == "δ=0 σ=1 ψ=id"
    assert "  1^v = c" in lines
    assert "  c^v = 1" in lines
    assert "  ψ(c) = c" in lines


def test_validate_builtin(capsys):
    assert main(["validate", "dual_numbers"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("dual_numbers: dim 2\nδ=1 σ=0 ψ=id\n")


def test_validate_unknown_algebra(capsys):
    assert main(["validate", "quaternions"]) == EXIT_ERROR
    assert "UnknownBuiltin" in capsys.readouterr().err


def test_validate_bad_file(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{", encoding="utf-8")
    assert main(["validate", str(path)]) == EXIT_ERROR
    assert "MalformedSpec" in capsys.readouterr().err


def test_validate_degenerate_trace_file(tmp_path, capsys):
    path = tmp_path / "degenerate.json"
    tree = builtin("dual_numbers").spec.to_tree()
    tree["trace"] = [[0, 1, 1]]
    path.write_text(json.dumps(tree), encoding="utf-8")
    assert main(["validate", str(path)]) == EXIT_ERROR
    assert "TraceDegenerate" in capsys.readouterr().err


# ──────────────────────────────────────────────
# heis
# ──────────────────────────────────────────────

def test_heis_ground_field(capsys):
    assert main(["heis", "Q1^(1) P1^(1)", "--algebra", "trivial"]) == EXIT_OK
    assert capsys.readouterr().out == "P1^(1) Q1^(1) + 1\n"


def test_heis_with_idempotents(capsys):
    argv = ["heis", "Q2 P1", "--algebra", "zigzag_a2", "--idempotents", "e1;e2", "--strategy", "rightmost"]
    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out == "P1^(1) Q2^(1) + q\n"


def test_heis_type_q(capsys):
    assert main(["heis", "P1^(2)", "--type-q", "1"]) == EXIT_OK
    assert capsys.readouterr().out == "1/2*P1^(1) P1^(1)\n"


def test_heis_parse_error_points_at_the_offset(capsys):
    assert main(["heis", "P1 * Q1"]) == EXIT_ERROR
    err = capsys.readouterr().err
    assert "at position 3" in err
    assert "  P1 * Q1\n     ^" in err


def test_heis_bad_idempotents(capsys):
    assert main(["heis", "P1", "--algebra", "zigzag_a2", "--idempotents", "zz"]) == EXIT_ERROR
    assert "bad idempotent" in capsys.readouterr().err
    assert main(["heis", "P1", "--algebra", "zigzag_a2", "--idempotents", "a12"]) == EXIT_ERROR
    assert "NotIdempotent" in capsys.readouterr().err


def test_heis_wrong_presentation(capsys):
    assert main(["heis", "Q1^[1^1] P1", "--presentation", "n,n"]) == EXIT_ERROR
    assert "UnknownGenerator" in capsys.readouterr().err


# ──────────────────────────────────────────────
# check
# ──────────────────────────────────────────────

def test_check_writes_a_report(tmp_path, capsys):
    out = tmp_path / "reports" / "frobenius.json"
    assert main(["check", "frobenius", "--algebra", "trivial", "--out", str(out)]) == EXIT_OK
    printed = capsys.readouterr().out
    assert printed.startswith("Wrote 5 cases to ")
    assert "5 pass, 0 fail, 0 skipped" in printed
    tree = json.loads(out.read_text(encoding="utf-8"))
    assert tree["suite"] == "frobenius"
    assert tree["totals"] == {"pass": 5, "fail": 0, "skipped": 0}


def test_check_to_stdout(capsys):
    assert main(["check", "frobenius", "--algebra", "clifford"]) == EXIT_OK
    tree = json.loads(capsys.readouterr().out)
    assert tree["algebra"] == "clifford"
    assert tree["totals"]["fail"] == 0


def test_reports_are_byte_identical(tmp_path, capsys):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    for path in (first, second):
        argv = ["check", "wreath", "--algebra", "dual_numbers", "--samples", "5", "--seed", "11", "--out", str(path)]
        assert main(argv) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


def test_check_isomorphisms_on_trivial(capsys):
    assert main(["check", "isomorphisms", "--algebra", "trivial", "--max-n", "2"]) == EXIT_OK
    tree = json.loads(capsys.readouterr().out)
    assert tree["totals"]["fail"] == 0
    assert {"iso-alpha-beta", "iso-beta-alpha", "up-down-multistrand"} <= {c["id"] for c in tree["cases"]}
    assert {c["ref"] for c in tree["cases"]} == {"theo:functor-isos", "eq:multi-strand-up-down-rel"}


def test_check_bad_idempotent(capsys):
    assert main(["check", "heisenberg", "--algebra", "zigzag_a2", "--f", "nope"]) == EXIT_ERROR
    assert "bad idempotent" in capsys.readouterr().err


def test_check_rejects_unknown_suite():
    with pytest.raises(SystemExit):
        main(["check", "everything"])
