"""
Tests for the diagram IR
========================
Construction, stacking, the omega involution and the line-oriented text
form with its error positions.

Run: pytest heiscat/diagram/tests/test_ir.py -v
"""

from fractions import Fraction

import pytest

from heiscat.diagram import ir
from heiscat.errors import BoundaryMismatch, ParseError


# ──────────────────────────────────────────────
# Construction
# ──────────────────────────────────────────────

def test_build_tracks_the_word():
    D = ir.build("QP", [(1, "dot_down", {0: 1}), (1, "cap_left")])
    assert D.target.letters == ()
    assert D.words() == [("Q", "P"), ("Q", "P"), ()]
    assert len(D) == 2


def test_cups_insert_before_position():
    assert ir.build("P", [(2, "cup_right")]).target.letters == ("P", "Q", "P")
    assert ir.build("P", [(1, "cup_left")]).target.letters == ("P", "Q", "P")


def test_generator_must_fit():
    with pytest.raises(BoundaryMismatch):
        ir.build("P", [(1, "cap_right")])
    with pytest.raises(BoundaryMismatch):
        ir.build("PQ", [(2, "cross_pp")])


def test_bad_letters_and_kinds():
    with pytest.raises(BoundaryMismatch):
        ir.ObjectWord(("P", "X"))
    with pytest.raises(BoundaryMismatch):
        ir.make_generator("teleport")
    with pytest.raises(BoundaryMismatch):
        ir.make_generator("box_up")


def test_degree(dual_numbers):
    x = {1: Fraction(1)}
    assert ir.degree(ir.build("", [(1, "cup_left")]), dual_numbers) == (1, 0)
    assert ir.degree(ir.build("QP", [(1, "cap_left")]), dual_numbers) == (-1, 0)
    assert ir.degree(ir.build("P", [(1, "dot_up", x), (1, "dot_up", x)]), dual_numbers) == (2, 0)


# ──────────────────────────────────────────────
# Stacking
# ──────────────────────────────────────────────

def test_compose_and_stack():
    cup = ir.build("", [(1, "cup_right")])
    cap = ir.build("QP", [(1, "cap_left")])
    D = ir.compose(cap, cup)
    assert D.source.letters == D.target.letters == ()
    assert ir.stack(cup, cap) == D
    with pytest.raises(BoundaryMismatch):
        ir.compose(cup, cup)


def test_pad_shifts_positions():
    D = ir.pad(ir.build("PQ", [(1, "cap_right")]), left=("Q",), right=("P",))
    assert D.source.letters == ("Q", "P", "Q", "P")
    assert D.target.letters == ("Q", "P")
    assert D.slices[0].pos == 2


def test_juxtapose():
    cross = ir.build("PP", [(1, "cross_pp")])
    cup = ir.build("", [(1, "cup_right")])
    D = ir.juxtapose(cross, cup)
    assert D.source.letters == ("P", "P")
    assert D.target.letters == ("P", "P", "Q", "P")
    assert D.crossings() == 1


def test_omega_counts_crossings():
    D = ir.build("PP", [(1, "cross_pp"), (1, "cross_pp"), (1, "cross_pp")])
    assert ir.omega(D).coefficient == -1
    assert ir.omega(ir.omega(D)) == D


def test_combination_boundary():
    a = ir.identity("P")
    b = ir.build("P", [(1, "dot_up", {0: 1})])
    combo = ir.combination(a, (-2, b))
    assert combo[1][0] == -2
    assert ir.boundary(combo) == (("P",), ("P",))
    with pytest.raises(BoundaryMismatch):
        ir.boundary(ir.combination(a, ir.identity("Q")))


# ──────────────────────────────────────────────
# Text form
# ──────────────────────────────────────────────

TEXT = """\
# a dotted counterclockwise circle
src: 1
coeff: -1/2
1 cup_right
1 dot_down x
1 cap_left
"""


def test_parse(dual_numbers):
    D = ir.parse(TEXT, dual_numbers)
    assert D.coefficient == Fraction(-1, 2)
    assert [sl.gen.kind for sl in D.slices] == ["cup_right", "dot_down", "cap_left"]
    assert D.slices[1].gen.vector == {1: Fraction(1)}


def test_dumps_parses_back(dual_numbers):
    D = ir.build("QP", [(1, "dot_down", {1: 2}), (1, "cross_qp")], coefficient=3)
    assert ir.parse(ir.dumps(D, dual_numbers), dual_numbers) == D


@pytest.mark.parametrize("text,position", [
    ("1 cap_right\n", 0),
    ("src: P\n1 frob\n", 9),
    ("src: P\n1 dot_up\n", 7),
    ("src: P\n1 dot_up y\n", 16),
    ("src: P\ncoeff: 1/0\n", 7),
    ("src: P\nsrc: Q\n", 7),
    ("", 0),
])
def test_parse_errors_carry_positions(dual_numbers, text, position):
    with pytest.raises(ParseError) as info:
        ir.parse(text, dual_numbers)
    assert info.value.position == position


def test_parse_rejects_a_mismatched_slice(dual_numbers):
    with pytest.raises(BoundaryMismatch):
        ir.parse("src: P\n1 cap_left\n", dual_numbers)
