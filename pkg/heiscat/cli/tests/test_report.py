"""
Tests for suite reports
=======================
Run: pytest heiscat/cli/tests/test_report.py -v
"""

import json
from fractions import Fraction

from heiscat import __version__
from heiscat.cli import report
from heiscat.cli.report import CaseRecord
from heiscat.diagram.harness import CheckResult, LabelResult


def _records():
    return [
        report.failed("zeta", (("n", 1),), "lhs != rhs"),
        report.passed("alpha", (("n", 2),)),
        report.skipped("alpha", (("n", 10),), "too big"),
        report.passed("alpha", (("n", 1),)),
    ]


def test_cases_are_sorted_and_counted():
    tree = report.build_report("local_relations", "trivial", _records(), 7, [0, 1])
    assert [(c["id"], c["params"]["n"]) for c in tree["cases"]] == [
        ("alpha", 1), ("alpha", 10), ("alpha", 2), ("zeta", 1)]
    assert tree["totals"] == {"pass": 2, "fail": 1, "skipped": 1}
    assert tree["meta"] == {"tool": "heiscat", "version": __version__, "seed": 7, "labels": [0, 1]}


def test_input_order_does_not_matter():
    a = report.dumps(report.build_report("s", "trivial", _records(), 1, [0]))
    b = report.dumps(report.build_report("s", "trivial", list(reversed(_records())), 1, [0]))
    assert a == b
    assert a.endswith("}\n")


def test_record_tree():
    assert CaseRecord("x", (("c", Fraction(1, 2)),), "pass").to_tree() == {
        "id": "x", "params": {"c": "1/2"}, "status": "pass"}
    assert report.failed("x", (), "why").to_tree()["detail"] == "why"


def test_verdict():
    assert report.verdict("x", (), True, "unused").detail is None
    assert report.verdict("x", (), False, "why").status == "fail"


def test_from_check():
    result = CheckResult("cross-pp-squared", (("n", 0),), [LabelResult(0, "pass"), LabelResult(1, "fail", "n=1: differs")])
    assert report.from_check(result) == CaseRecord("cross-pp-squared", (("n", 0),), "fail", "n=1: differs")
    skipped = CheckResult("cross-pp-squared", (), [], note="needs a larger cap")
    assert report.from_check(skipped).status == "skipped"


def test_write_report_creates_directories(tmp_path):
    tree = report.build_report("s", "trivial", _records(), 1, [0])
    path = report.write_report(tree, tmp_path / "nested" / "dir" / "r.json")
    assert json.loads(path.read_text(encoding="utf-8")) == tree
    assert [c["id"] for c in report.failures(tree)] == ["zeta"]


def test_records_carry_citation_keys():
    assert report.passed("zigzag-left", (("n", 0),)).ref == "eq:left-unit-counit"
    assert report.skipped("bubble-slide", (), "too big").ref == "prop:bubble-slide"
    result = CheckResult("curl-nakayama", (("b", "1"),), [LabelResult(0, "pass")], ref="eq:curl-Nakayama")
    assert report.from_check(result).to_tree()["ref"] == "eq:curl-Nakayama"
    bare = CheckResult("double-crossing-qp", (), [LabelResult(0, "pass")])
    assert report.from_check(bare).ref == "eq:rel2a"
