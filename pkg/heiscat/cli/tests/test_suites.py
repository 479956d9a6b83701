"""
Tests for the verification suites
=================================
Small option sets keep each suite fast; every check on a builtin algebra
is expected to pass or skip.

Run: pytest heiscat/cli/tests/test_suites.py -v
"""

import pytest

from heiscat.algebra.frobenius import BUILTIN_NAMES, builtin
from heiscat.cli.suites import (
    ALL,
    SUITES,
    SuiteOptions,
    idempotent_family,
    labels_for,
    parse_idempotent,
    run_suite,
)
from heiscat.diagram.harness import FAIL, SKIPPED
from heiscat.references import INDEX

SMALL = SuiteOptions(max_n=1, samples=3, workers=1)


# ──────────────────────────────────────────────
# Helpers
# ──────────────────────────────────────────────

def _failures(records):
    return [r for r in records if r.status == FAIL]


def _ids(records):
    return {r.id for r in records}


def test_labels_for(trivial, zigzag):
    assert labels_for(trivial, 3) == [0, 1, 2, 3]
    assert labels_for(zigzag, 3) == [0, 1, 2]
    assert labels_for(zigzag, 1) == [0, 1]


def test_idempotent_family(zigzag, dual_numbers):
    unit = dict(zigzag.unit)
    e1, e2 = zigzag.parse_element("e1"), zigzag.parse_element("e2")
    assert idempotent_family(zigzag, SuiteOptions()) == [("1", unit), ("e1", e1), ("e2", e2)]
    assert idempotent_family(zigzag, SuiteOptions(), primitive=True) == [("e1", e1), ("e2", e2)]
    assert idempotent_family(zigzag, SuiteOptions(f="e1", g="e1")) == [("e1", e1)]
    assert idempotent_family(dual_numbers, SuiteOptions(), primitive=True) == [("1", dict(dual_numbers.unit))]
    assert parse_idempotent(dual_numbers, " 1 ") == dual_numbers.unit


@pytest.mark.parametrize("name", ["trivial", "clifford", "dual_numbers", "zigzag"])
def test_frobenius_suite(name, request):
    records = run_suite("frobenius", request.getfixturevalue(name), SMALL)
    assert records
    assert not _failures(records)


@pytest.mark.parametrize("name", ["trivial", "dual_numbers"])
@pytest.mark.parametrize("suite", ["wreath", "adjunctions", "local_relations"])
def test_layer_suites(name, suite, request):
    records = run_suite(suite, request.getfixturevalue(name), SMALL)
    assert records
    assert not _failures(records)


def test_heisenberg_suite(trivial, zigzag):
    records = run_suite("heisenberg", trivial, SMALL)
    assert "heis-ground-field-relation" in _ids(records)
    assert not _failures(records)
    records = run_suite("heisenberg", zigzag, SMALL)
    skipped = [r for r in records if r.id == "heis-ground-field-relation"]
    assert skipped and skipped[0].status == "skipped"
    assert not _failures(records)


def test_dahg_suite(trivial):
    records = run_suite("dahg", trivial, SuiteOptions(max_n=1, m=1, samples=3, workers=1))
    assert {"dm-degenerate-affine", "dm-injectivity", "dm-tij-leading", "dm-diagram-triangle"} <= _ids(records)
    assert not _failures(records)


def test_unknown_suite(trivial):
    with pytest.raises(KeyError):
        run_suite("everything", trivial, SMALL)


def test_all_is_not_a_registered_suite():
    assert ALL not in SUITES
    assert "dahg" in SUITES


# ──────────────────────────────────────────────
# Every builtin, end to end
# ──────────────────────────────────────────────

def _size_skips_only(records):
    return [(r.id, r.params, r.detail) for r in records if r.status == SKIPPED and "SIZE_CAP" not in (r.detail or "")]


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_curls_and_bubbles_on_every_builtin(name):
    records = run_suite("curls_bubbles", builtin(name), SuiteOptions(max_n=2, workers=1))
    assert {"curl-slide-left", "curl-slide-right", "bubble-slide", "bubble-nakayama"} <= _ids(records)
    assert [(r.id, r.params, r.detail) for r in _failures(records)] == []
    assert _size_skips_only(records) == []


@pytest.mark.parametrize("name", BUILTIN_NAMES)
@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 1)])
def test_isomorphisms_on_every_builtin(name, m, n):
    records = run_suite("isomorphisms", builtin(name), SuiteOptions(max_n=2, m=m, n=n, workers=1))
    assert {"up-down-multistrand", "iso-beta-alpha", "iso-alpha-beta"} <= _ids(records)
    assert [(r.id, r.params, r.detail) for r in _failures(records)] == []
    assert _size_skips_only(records) == []


def test_dahg_triangle_on_odd_trace(clifford):
    records = run_suite("dahg", clifford, SuiteOptions(max_n=1, m=1, samples=3, workers=1))
    triangle = [r for r in records if r.id == "dm-diagram-triangle"]
    assert triangle and all(r.status != SKIPPED or "SIZE_CAP" in (r.detail or "") for r in triangle)
    assert not _failures(records)


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_every_record_cites_an_indexed_identity(suite, trivial):
    records = run_suite(suite, trivial, SuiteOptions(max_n=1, m=1, n=1, samples=2, workers=1))
    assert records
    assert sorted({r.id for r in records if r.ref not in INDEX}) == []
