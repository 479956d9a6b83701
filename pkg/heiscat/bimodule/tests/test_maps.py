"""
Tests for bimodule maps and the local generator images
======================================================
Every generating morphism must be homogeneous of its stated degree and
commute with the left action; the map algebra (sums, composites,
whiskering) must respect shapes.

Run: pytest heiscat/bimodule/tests/test_maps.py -v
"""

from fractions import Fraction

import pytest

from heiscat.algebra import wreath
from heiscat.bimodule import maps
from heiscat.bimodule.local import SHAPES, adjunction_map, generator_degree, generator_map
from heiscat.bimodule.maps import algebra_generators, compose, identity, mult_operator, whisker
from heiscat.bimodule.words import WordBimodule
from heiscat.errors import NotIntertwining, ShapeMismatch


# ──────────────────────────────────────────────
# Helpers
# ──────────────────────────────────────────────

def _label(alg, kind):
    """The top basis vector for dots, nothing otherwise."""
    if kind.startswith("dot"):
        return {alg.dim - 1: Fraction(1)}
    return None


# ──────────────────────────────────────────────
# Generator maps
# ──────────────────────────────────────────────

@pytest.mark.parametrize("name", ["trivial", "dual_numbers"])
@pytest.mark.parametrize("kind", sorted(SHAPES))
@pytest.mark.parametrize("r", [1, 2])
def test_generator_maps_are_bimodule_maps(name, kind, r, request):
    B = request.getfixturevalue(name)
    f = generator_map(B, kind, r, _label(B, kind))
    assert f.source.word == tuple(SHAPES[kind][0])
    assert f.target.word == tuple(SHAPES[kind][1])
    if f.source.is_zero:
        assert f.is_zero()
        return
    f.check_homogeneous()
    f.check_left_intertwining(algebra_generators(B, f.source.left_rank))


def test_left_cup_and_cap_degrees(dual_numbers):
    assert generator_degree(dual_numbers, "cup_left") == (1, 0)
    assert generator_degree(dual_numbers, "cap_left") == (-1, 0)
    assert generator_degree(dual_numbers, "cross_pq") == (0, 0)
    assert generator_degree(dual_numbers, "dot_up", {1: Fraction(1)}) == (1, 0)


def test_counterclockwise_bubble_is_the_trace_of_one(trivial, dual_numbers):
    for r in (0, 1, 2):
        bubble = compose(generator_map(trivial, "cap_left", r), generator_map(trivial, "cup_right", r))
        assert bubble == identity(WordBimodule(trivial, "", r))
        bubble = compose(generator_map(dual_numbers, "cap_left", r), generator_map(dual_numbers, "cup_right", r))
        assert bubble.is_zero()


def test_crossing_squares_to_identity(dual_numbers):
    cross = generator_map(dual_numbers, "cross_pp", 1)
    assert compose(cross, cross) == identity(WordBimodule(dual_numbers, "PP", 1))


def test_adjunction_aliases(trivial):
    assert adjunction_map(trivial, "eps_R", 1) == generator_map(trivial, "cap_right", 1)
    assert adjunction_map(trivial, "eta_L", 1) == generator_map(trivial, "cup_left", 1)


# ──────────────────────────────────────────────
# Map algebra
# ──────────────────────────────────────────────

def test_sums_and_scaling(dual_numbers):
    M = WordBimodule(dual_numbers, "P", 1)
    one = identity(M)
    assert (one - one).is_zero()
    assert one + one == one.scale(2)
    assert -one == one.scale(-1)


def test_parallel_maps_required(trivial):
    with pytest.raises(ShapeMismatch):
        identity(WordBimodule(trivial, "P", 1)) + identity(WordBimodule(trivial, "Q", 1))
    with pytest.raises(ShapeMismatch):
        compose(identity(WordBimodule(trivial, "P", 1)), identity(WordBimodule(trivial, "P", 2)))


def test_whiskering_identities_gives_identity(dual_numbers):
    PQ = identity(WordBimodule(dual_numbers, "PQ", 1))
    assert whisker("P", identity(WordBimodule(dual_numbers, "Q", 1)), "", 1) == PQ
    assert whisker("", identity(WordBimodule(dual_numbers, "P", 0)), "Q", 1) == PQ


def test_whiskering_checks_the_slot_label(trivial):
    with pytest.raises(ShapeMismatch):
        whisker("", identity(WordBimodule(trivial, "P", 1)), "Q", 1)


def test_tensor_of_identities(trivial):
    f = identity(WordBimodule(trivial, "P", 1))
    g = identity(WordBimodule(trivial, "Q", 1))
    with pytest.raises(ShapeMismatch):
        maps.tensor_maps(f, g)
    f0 = identity(WordBimodule(trivial, "P", 0))
    assert maps.tensor_maps(f0, g) == identity(WordBimodule(trivial, "PQ", 1))


# ──────────────────────────────────────────────
# Multiplication operators
# ──────────────────────────────────────────────

def test_right_multiplication_by_jucys_murphy(dual_numbers):
    M = WordBimodule(dual_numbers, "P", 1)
    f = mult_operator("right", wreath.jucys_murphy(dual_numbers, 1), M)
    f.check_homogeneous()
    assert not f.is_zero()


def test_right_multiplication_needs_a_supercentral_element(dual_numbers):
    M = WordBimodule(dual_numbers, "P", 1)
    with pytest.raises(NotIntertwining):
        mult_operator("right", wreath.from_perm(dual_numbers, (2, 1)), M)


def test_left_multiplication_by_one(dual_numbers):
    M = WordBimodule(dual_numbers, "QP", 1)
    assert mult_operator("left", wreath.one(dual_numbers, 1), M) == identity(M)


def test_unknown_side(dual_numbers):
    with pytest.raises(ValueError):
        mult_operator("up", wreath.one(dual_numbers, 1), WordBimodule(dual_numbers, "Q", 1))
