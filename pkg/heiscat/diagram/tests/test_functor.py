"""
Tests for the evaluation functor
================================
Curls, element diagrams and zero regions evaluated against direct
multiplication operators.

Run: pytest heiscat/diagram/tests/test_functor.py -v
"""

import pytest

from heiscat.algebra import wreath
from heiscat.diagram import functor, ir, library


@pytest.mark.parametrize("name", ["trivial", "dual_numbers"])
@pytest.mark.parametrize("n", [1, 2])
def test_right_curl_is_right_multiplication_by_jucys_murphy(name, n, request):
    B = request.getfixturevalue(name)
    curl = functor.evaluate(library.right_curl(1), B, n)
    expected = functor.right_action(B, wreath.jucys_murphy(B, n), 1, n)
    assert functor.maps_equal(curl, expected)


@pytest.mark.parametrize("r", [2, 3])
def test_downward_element_diagram_is_left_multiplication(dual_numbers, r):
    elem = wreath.from_key(dual_numbers, (1, 0), (2, 1))
    D = library.element_diagram(elem, "Q")
    assert functor.evaluate(D, dual_numbers, r) == functor.left_multiplication(dual_numbers, elem, 2, r)


@pytest.mark.parametrize("r", [0, 1])
def test_upward_crossing_is_right_multiplication(trivial, r):
    s = wreath.from_perm(trivial, (2, 1))
    D = library.element_diagram(s, "P")
    assert functor.evaluate(D, trivial, r) == functor.right_multiplication(trivial, s, 2, r)


def test_negative_region_gives_zero(trivial):
    assert functor.evaluate(ir.identity("Q"), trivial, 0).is_zero()
    assert functor.evaluate(ir.identity("PQ"), trivial, 0).is_zero()


def test_opposite_terms_cancel(dual_numbers):
    D = ir.build("P", [(1, "dot_up", {1: 1})])
    f = functor.evaluate_sum([(1, D), (-1, D)], dual_numbers, 1)
    assert f.is_zero()


def test_zero_coefficient_evaluates_to_zero(dual_numbers):
    D = ir.build("QP", [(1, "cap_left")], coefficient=0)
    assert functor.evaluate(D, dual_numbers, 1).is_zero()


def test_evaluate_all(trivial):
    maps = functor.evaluate_all(ir.identity("P"), trivial, [0, 1, 2])
    assert sorted(maps) == [0, 1, 2]
    assert all(not f.is_zero() for f in maps.values())
