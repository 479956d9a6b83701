"""
Tests for chi' and the disturbance filtration
=============================================
chi' is checked against the defining relations of D_m, against products of
PBW monomials, and against the evaluation functor on P^m.

Run: pytest heiscat/dahg/tests/test_chi.py -v
"""

import pytest

from heiscat import config
from heiscat.algebra import wreath
from heiscat.dahg import chi, dm
from heiscat.diagram.functor import maps_equal
from heiscat.errors import IndexOutOfRange, SizeLimit


def test_x_goes_to_a_jucys_murphy_element(trivial):
    assert chi.chi_prime(1, 1, dm.x(trivial, 1, 1)) == wreath.from_perm(trivial, (2, 1))
    assert chi.chi_prime(1, 0, dm.x(trivial, 1, 1)).is_zero()
    assert chi.chi_prime(2, 1, dm.one(trivial, 2)) == wreath.one(trivial, 3)


@pytest.mark.parametrize("name", ["trivial", "dual_numbers"])
@pytest.mark.parametrize("m,n", [(1, 1), (2, 0), (2, 1)])
def test_defining_relations_hold(name, m, n, request):
    alg = request.getfixturevalue(name)
    images = list(chi.relation_images(alg, m, n))
    assert images
    for rid, at, lhs, rhs in images:
        assert lhs == rhs, f"{rid} at {at}"


def test_images_multiply_in_the_opposite_order(trivial):
    gens = [dm.x(trivial, 2, 1), dm.x(trivial, 2, 2), dm.s(trivial, 2, 1)]
    for a in gens:
        for b in gens:
            assert chi.chi_prime(2, 1, a * b) == chi.chi_prime(2, 1, b) * chi.chi_prime(2, 1, a)


def test_chi_prime_errors(trivial, monkeypatch):
    with pytest.raises(IndexOutOfRange):
        chi.chi_prime(2, 1, dm.x(trivial, 1, 1))
    with pytest.raises(IndexOutOfRange):
        chi.chi_prime(1, -1, dm.x(trivial, 1, 1))
    with pytest.raises(IndexOutOfRange):
        chi.x_image(trivial, 1, 1, 2)
    monkeypatch.setattr(config, "SIZE_CAP", 3)
    with pytest.raises(SizeLimit):
        chi.chi_prime(1, 2, dm.x(trivial, 1, 1))


# ──────────────────────────────────────────────
# Filtration
# ──────────────────────────────────────────────

def test_disturbance():
    assert chi.disturbance((2, 1, 3), 1) == 1
    assert chi.disturbance((1, 2, 3), 2) == 0
    assert chi.disturbance((3, 2, 1), 2) == 1
    assert chi.disturbance((2, 3, 1), 2) == 2


def test_filtration_level(trivial):
    J2 = wreath.jucys_murphy(trivial, 2)
    assert chi.filtration_level(J2, 2) == 1
    assert chi.filtration_level(wreath.one(trivial, 3), 2) == 0
    assert chi.leading_part(J2 + wreath.one(trivial, 3), 2, 1) == J2


@pytest.mark.parametrize("name", ["trivial", "dual_numbers", "clifford"])
@pytest.mark.parametrize("indices", [(1,), (2,), (1, 2)])
def test_tij_leading_terms(name, indices, request):
    alg = request.getfixturevalue(name)
    for j in (3, 4):
        got = chi.tij_graded_product(alg, indices, j, 2, 2)
        assert got == chi.tij_leading_formula(alg, indices, j, 2, 2)
        assert chi.filtration_level(got, 2) == len(indices)


def test_tij_errors(trivial):
    with pytest.raises(IndexOutOfRange):
        chi.tij_graded_product(trivial, (3,), 3, 2, 1)
    with pytest.raises(IndexOutOfRange):
        chi.tij_graded_product(trivial, (1,), 2, 2, 1)
    with pytest.raises(IndexOutOfRange):
        chi.tij_leading_formula(trivial, (2, 1), 3, 2, 1)
    assert chi.tij_leading_formula(trivial, (), 3, 2, 1) == wreath.one(trivial, 3)


def test_repeated_indices_vanish_in_the_associated_graded(dual_numbers):
    assert chi.tij_graded_product(dual_numbers, (1, 1), 3, 2, 1).is_zero()


# ──────────────────────────────────────────────
# Injectivity and the diagrammatic triangle
# ──────────────────────────────────────────────

def test_injective_once_n_is_large_enough(trivial):
    report = chi.certify_injectivity(trivial, 1, 2, 2, workers=1)
    assert report.injective
    assert report.to_tree()["count"] == 3


def test_injective_over_clifford(clifford):
    report = chi.certify_injectivity(clifford, 1, 2, 1, workers=1)
    assert (report.count, report.rank) == (4, 4)


def test_x_dies_without_ambient_strands(trivial):
    report = chi.certify_injectivity(trivial, 1, 0, 2, workers=1)
    assert not report.injective
    assert (report.rank, report.deficit) == (1, 2)


@pytest.mark.parametrize("name", ["trivial", "dual_numbers"])
@pytest.mark.parametrize("n", [0, 1])
def test_triangle_commutes(name, n, request):
    alg = request.getfixturevalue(name)
    for key in dm.pbw_basis(alg, 2, 1):
        lhs, rhs = chi.triangle(alg, key, n)
        assert maps_equal(lhs, rhs), dm.monomial(alg, *key).format()
