"""
Tests for the PBW rewriter of D_m
=================================
Run: pytest heiscat/dahg/tests/test_dm.py -v
"""

import pytest

from heiscat import config
from heiscat.algebra import wreath
from heiscat.dahg import dm
from heiscat.errors import IndexOutOfRange, RankMismatch, SizeLimit


def test_degenerate_affine_hecke(trivial):
    x1, x2, s1 = dm.x(trivial, 2, 1), dm.x(trivial, 2, 2), dm.s(trivial, 2, 1)
    assert s1 * x2 == x1 * s1 - dm.one(trivial, 2)
    assert s1 * s1 == dm.one(trivial, 2)
    assert x2 * x1 == x1 * x2


def test_crossing_then_dot_on_the_other_strand(trivial):
    s1, x1 = dm.s(trivial, 2, 1), dm.x(trivial, 2, 1)
    # s_1 x_1 = x_2 s_1 + C'_1, and C'_1 = 1 over the ground field
    assert s1 * x1 == dm.x(trivial, 2, 2) * s1 + dm.one(trivial, 2)


def test_products_are_associative(trivial):
    x1, x2, s1 = dm.x(trivial, 2, 1), dm.x(trivial, 2, 2), dm.s(trivial, 2, 1)
    assert (x1 * s1) * x2 == x1 * (s1 * x2)
    assert (s1 * x2) * s1 == s1 * (x2 * s1)


def test_even_dots_commute_with_x(dual_numbers):
    x_label = dual_numbers.parse_element("x")
    d = dm.dot(dual_numbers, 2, x_label, 1)
    x1 = dm.x(dual_numbers, 2, 1)
    assert d * x1 == x1 * d
    assert (x1 * d).x_degree() == 1


def test_far_x_commutes_with_crossing(dual_numbers):
    s1, x3 = dm.s(dual_numbers, 3, 1), dm.x(dual_numbers, 3, 3)
    assert s1 * x3 == x3 * s1


def test_pbw_basis(trivial, monkeypatch):
    assert list(dm.exponent_vectors(2, 1)) == [(0, 0), (0, 1), (1, 0)]
    assert len(dm.pbw_basis(trivial, 2, 1)) == 6
    monkeypatch.setattr(config, "SIZE_CAP", 5)
    with pytest.raises(SizeLimit):
        dm.pbw_basis(trivial, 2, 1)


def test_format(trivial):
    assert dm.x(trivial, 2, 1).format() == "x1 1(x)1"
    assert dm.s(trivial, 2, 1).format() == "1(x)1[21]"
    assert (dm.x(trivial, 2, 2) * dm.x(trivial, 2, 2)).format() == "x2^2 1(x)1"
    assert dm.DmElement(trivial, 2).format() == "0"


def test_errors(trivial):
    with pytest.raises(IndexOutOfRange):
        dm.DmElement(trivial, 0)
    with pytest.raises(IndexOutOfRange):
        dm.x(trivial, 2, 3)
    with pytest.raises(IndexOutOfRange):
        dm.s(trivial, 2, 2)
    with pytest.raises(RankMismatch):
        dm.x(trivial, 1, 1) + dm.x(trivial, 2, 1)


def test_from_wreath_round_trip(dual_numbers):
    u = wreath.dot(dual_numbers, dual_numbers.parse_element("x"), 2, 2)
    a = dm.from_wreath(u)
    assert a.x_degree() == 0
    assert a.parity() == 0
    assert set(a.terms) == {((0, 0), key) for key, _ in u.items()}
