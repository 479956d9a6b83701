"""
Tests for the relation catalog and harness
==========================================
The defining relations must hold under F_n on the small builtins; the
harness must report mismatches, skips and malformed cases.

Run: pytest heiscat/diagram/tests/test_relations.py -v
"""

from fractions import Fraction

import pytest

from heiscat import config
from heiscat.diagram import harness, ir, library, relations
from heiscat.diagram.relations import DEGREE, ISOMORPHISMS, LOCAL, Case, Options
from heiscat.errors import BoundaryMismatch, DegreeMismatch, IndexOutOfRange, ShapeMismatch
from heiscat.references import INDEX


# ──────────────────────────────────────────────
# Helpers
# ──────────────────────────────────────────────

def _suite_cases(alg, suite, opts=None):
    return [case for r in relations.in_suite(suite) for case in r.cases(alg, opts)]


def _statuses(results):
    return {r.sort_key: r.status for r in results}


# ──────────────────────────────────────────────
# Catalog
# ──────────────────────────────────────────────

def test_catalog_ids_are_unique_and_grouped():
    assert len(relations.CATALOG) == len(set(relations.CATALOG))
    suites = {r.suite for r in relations.CATALOG.values()}
    assert suites == {relations.LOCAL, relations.DERIVED, relations.ISOMORPHISMS, DEGREE}


@pytest.mark.parametrize("name", ["trivial", "dual_numbers", "clifford"])
def test_local_relations_hold(name, request):
    B = request.getfixturevalue(name)
    results = harness.run_cases(_suite_cases(B, LOCAL), B, (0, 1, 2), workers=1)
    failed = [(r.sort_key, r.detail) for r in results if r.status == harness.FAIL]
    assert failed == []
    assert any(r.status == harness.PASS for r in results)


def test_every_relation_cites_an_indexed_identity(clifford):
    missing = [r.id for r in relations.CATALOG.values() if r.ref not in INDEX]
    assert missing == []
    cases = relations.CATALOG["curl-slide-left"].cases(clifford)
    assert {case.ref for case in cases} == {"eq:circle-mult-leftup-slide"}


def test_default_idempotents(zigzag, trivial):
    assert [name for name, _ in relations.default_idempotents(zigzag)] == ["1", "e1", "e2"]
    assert relations.default_idempotents(trivial) == [("1", trivial.unit)]


# ──────────────────────────────────────────────
# Degree vanishing
# ──────────────────────────────────────────────

def test_no_negative_endomorphisms_when_trace_has_degree_zero(trivial):
    assert relations.negative_endomorphisms(trivial, "", 3) == []
    case, = relations.CATALOG["end-negative-degree"].cases(trivial)
    assert case.skip


def test_endomorphism_words_put_p_before_q():
    for word in relations.ENDOMORPHISM_WORDS:
        assert "QP" not in word
        assert len(word) <= 2


def test_negative_endomorphisms_of_the_empty_word(dual_numbers):
    found = relations.negative_endomorphisms(dual_numbers, "", 2)
    assert found
    for D in found:
        assert D.source.letters == D.target.letters == ()
        assert ir.degree(D, dual_numbers)[0] < 0
        assert len(D) <= 2


def test_short_negative_endomorphisms_vanish(dual_numbers):
    cases = _suite_cases(dual_numbers, DEGREE, Options(max_slices=2))
    results = harness.run_cases(cases, dual_numbers, (0, 1, 2), workers=1)
    assert results
    assert all(r.status != harness.FAIL for r in results)


# ──────────────────────────────────────────────
# Harness
# ──────────────────────────────────────────────

def test_mismatch_is_reported(trivial):
    case = Case("scaled-identity", (), ir.combination(ir.identity("P")), ir.combination((2, ir.identity("P"))))
    result = harness.run_case(case, trivial, (1,))
    assert result.status == harness.FAIL
    assert result.detail.startswith("n=1:")


def test_skipped_case(trivial):
    result = harness.run_case(Case("later", (), [], [], skip="not yet"), trivial, (0, 1))
    assert result.status == harness.SKIPPED
    assert result.detail == "not yet"


def test_boundaries_must_agree(trivial):
    with pytest.raises(BoundaryMismatch):
        harness.check_relation(ir.combination(ir.identity("P")), ir.combination(ir.identity("Q")), (1,), trivial)


def test_degrees_must_agree(dual_numbers):
    dotted = ir.build("P", [(1, "dot_up", {1: 1})])
    with pytest.raises(DegreeMismatch):
        harness.check_relation(ir.combination(ir.identity("P")), ir.combination(dotted), (1,), dual_numbers)


def test_size_cap_skips_a_label(trivial, monkeypatch):
    monkeypatch.setattr(config, "SIZE_CAP", 2)
    combo = ir.combination(ir.identity("PP"))
    result = harness.check_relation(combo, combo, (0, 2), trivial)
    assert [r.status for r in result.labels] == [harness.PASS, harness.SKIPPED]
    assert result.status == harness.PASS


def test_results_are_sorted(trivial):
    cases = relations.CATALOG["snake"].cases(trivial) + relations.CATALOG["braid-up"].cases(trivial)
    keys = [r.sort_key for r in harness.run_cases(cases, trivial, (1,), workers=1)]
    assert keys == sorted(keys)


# ──────────────────────────────────────────────
# Library
# ──────────────────────────────────────────────

def test_iso_coefficients():
    assert library.stabilizer_order((0, 0, 1)) == 2
    assert library.iso_coefficient(2, 2, 1, (0,)) == 4
    assert library.iso_coefficient(2, 2, 2, (1, 1)) == 2


def test_repeated_labels_need_even_duals(clifford):
    assert library.d_sets(clifford, clifford.unit, clifford.unit, 2) == [(0, 1), (1, 1)]


def test_slice_basis_between_idempotents(zigzag):
    e1, e2 = zigzag.parse_element("e1"), zigzag.parse_element("e2")
    assert library.slice_basis(zigzag, e1, e2) == [zigzag.index_of("a21")]


def test_alpha_beta_checks_k(trivial):
    with pytest.raises(IndexOutOfRange):
        library.alpha_beta(trivial, trivial.unit, trivial.unit, 1, 1, 2, [{0: 1}, {0: 1}])
    with pytest.raises(IndexOutOfRange):
        library.alpha_beta(trivial, trivial.unit, trivial.unit, 1, 1, 1, [])


def test_alpha_beta_boundaries(trivial):
    alpha, beta = library.alpha_beta(trivial, trivial.unit, trivial.unit, 2, 1, 1, [{0: Fraction(1)}])
    assert alpha.source.letters == ("Q", "P", "P")
    assert alpha.target.letters == ("P",)
    assert beta.source.letters == alpha.target.letters
    assert beta.target.letters == alpha.source.letters


def test_zero_label_bubble_is_zero():
    assert library.bubble({0: 0}, 1).is_zero()
    with pytest.raises(ValueError):
        library.bubble({0: 1}, 0, "sideways")


def test_element_diagram_needs_one_term(trivial):
    from heiscat.algebra import wreath

    with pytest.raises(ShapeMismatch):
        library.element_diagram(wreath.jucys_murphy(trivial, 2), "Q")


def test_strand_word_folds_the_koszul_sign(clifford, trivial):
    c = clifford.basis_vector(clifford.index_of("c"))
    assert library.strand_word(clifford, [c, c]).coefficient == -1
    assert library.strand_word(clifford, [c, library.CURL, library.CURL]).coefficient == -1
    assert library.strand_word(clifford, [c, clifford.unit]).coefficient == 1
    assert library.strand_word(clifford, [clifford.unit, library.CURL, c]).coefficient == -1
    assert library.strand_word(trivial, [library.CURL, library.CURL], 3).coefficient == 3
    assert library.strand_word(clifford, [{0: 0}, library.CURL]).is_zero()


def test_nested_cap_sign(clifford, trivial):
    assert library.nested_cap_sign(clifford, [1, 0]) == -1
    assert library.nested_cap_sign(clifford, [0, 1]) == 1
    assert library.nested_cap_sign(clifford, [1, 1, 1]) == -1
    assert library.nested_cap_sign(trivial, [1, 1]) == 1


# ──────────────────────────────────────────────
# Curls and bubbles for odd traces
# ──────────────────────────────────────────────

def test_odd_curl_counts_vanish(clifford, trivial):
    cases = relations.CATALOG["bubble-curl-parity"].cases(clifford)
    assert {(dict(c.params)["d"], dict(c.params)["b"]) for c in cases} == {(1, "1"), (1, "c")}
    assert len(cases) == 4
    assert relations.CATALOG["bubble-curl-parity"].cases(trivial) == []


def test_bubble_slide_runs_over_curls(trivial):
    ds = {dict(c.params)["d"] for c in relations.CATALOG["bubble-slide"].cases(trivial)}
    assert ds == {0, 1, 2}
    assert all(c.skip is None for c in relations.CATALOG["bubble-slide"].cases(trivial))


def test_nested_caps_with_odd_labels(clifford):
    opts = Options(sizes=((2, 2),))
    cases = _suite_cases(clifford, ISOMORPHISMS, opts)
    results = harness.run_cases(cases, clifford, (0, 1), workers=1)
    assert [(r.sort_key, r.detail) for r in results if r.status == harness.FAIL] == []
