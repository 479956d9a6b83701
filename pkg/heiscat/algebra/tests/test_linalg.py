"""
Tests for heiscat.algebra.linalg
================================
Run: pytest heiscat/algebra/tests/test_linalg.py -v
"""

from fractions import Fraction

import pytest

from heiscat.algebra.linalg import invert, rank_of_rows, reduce_against, rref_rows


def test_rank_of_dependent_rows():
    rows = [{0: Fraction(1), 1: Fraction(2)}, {0: Fraction(2), 1: Fraction(4)}, {2: Fraction(1)}]
    assert rank_of_rows(rows, 3) == 2


def test_rank_of_nothing():
    assert rank_of_rows([], 4) == 0
    assert rank_of_rows([{}], 2) == 0


def test_rref_pivots():
    rows = [{1: Fraction(2), 2: Fraction(2)}, {0: Fraction(1)}]
    reduced, pivots = rref_rows(rows, 3)
    assert pivots == [0, 1]
    assert reduced == [{0: Fraction(1)}, {1: Fraction(1), 2: Fraction(1)}]


def test_invert():
    inv = invert([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]])
    assert inv == [[Fraction(1), Fraction(-1)], [Fraction(-1), Fraction(2)]]


def test_invert_singular():
    with pytest.raises(ValueError):
        invert([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])


def test_reduce_against():
    basis, pivots = rref_rows([{0: Fraction(1), 1: Fraction(1)}], 2)
    assert reduce_against({0: Fraction(3), 1: Fraction(3)}, basis, pivots) == {}
    assert reduce_against({0: Fraction(1)}, basis, pivots) == {1: Fraction(-1)}
