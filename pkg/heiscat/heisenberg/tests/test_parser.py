"""
Tests for the Heisenberg expression parser
==========================================
Run: pytest heiscat/heisenberg/tests/test_parser.py -v
"""

from fractions import Fraction

import pytest

from heiscat.algebra.wreath import COLUMN, ROW
from heiscat.errors import ParseError
from heiscat.heisenberg.algebra import GeneratorSymbol
from heiscat.heisenberg.parser import parse_expression


def test_parse_terms():
    terms = parse_expression("Q1^(2) P1^(3) - 1/2*P2^[1^3]")
    assert terms == [
        (Fraction(1), (GeneratorSymbol("Q", 1, ROW, 2), GeneratorSymbol("P", 1, ROW, 3))),
        (Fraction(-1, 2), (GeneratorSymbol("P", 2, COLUMN, 3),)),
    ]


def test_bare_factor_has_size_one():
    assert parse_expression("-P1") == [(Fraction(-1), (GeneratorSymbol("P", 1, ROW, 1),))]


def test_scalar_term():
    assert parse_expression(" 3 ") == [(Fraction(3), ())]
    assert parse_expression("1 + 2*Q1") == [(Fraction(1), ()), (Fraction(2), (GeneratorSymbol("Q", 1, ROW, 1),))]


@pytest.mark.parametrize("text,position", [
    ("", 0),
    ("P1 +", 4),
    ("P1 * Q1", 3),
    ("P1^(0)", 0),
    ("1/0*P1", 0),
    ("Q1 X2", 3),
])
def test_parse_errors(text, position):
    with pytest.raises(ParseError) as info:
        parse_expression(text)
    assert info.value.position == position
    assert str(info.value).endswith(f"at position {position}")
