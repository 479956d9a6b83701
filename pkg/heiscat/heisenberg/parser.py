"""
Heisenberg expression parser
============================
Grammar (whitespace between tokens is ignored):

    expr    := ["-"] term (("+" | "-") term)*
    term    := coeff ["*" factors] | factors
    coeff   := integer ["/" integer]
    factors := factor+
    factor  := ("P" | "Q") index [ "^(" size ")" | "^[1^" size "]" ]

A bare factor such as ``P1`` has size 1; the coefficient ``1`` alone is the
empty product.

Usage
-----
    from heiscat.heisenberg.parser import parse_expression

    parse_expression("Q1^(2) P1^(3) - 1/2*P2^[1^3]")
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Optional, Tuple

from heiscat.algebra.wreath import COLUMN, ROW
from heiscat.errors import ParseError, UnknownGenerator
from heiscat.heisenberg.algebra import GeneratorSymbol, Word

_FACTOR = re.compile(r"([PQ])(\d+)(?:\^\((\d+)\)|\^\[1\^(\d+)\])?")
_COEFF = re.compile(r"(\d+)(?:/(\d+))?")
_SPACE = re.compile(r"\s*")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        self.pos = _SPACE.match(self.text, self.pos).end()

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos:self.pos + 1]

    def take(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def match(self, pattern: re.Pattern) -> Optional[re.Match]:
        self.skip()
        m = pattern.match(self.text, self.pos)
        if m:
            self.pos = m.end()
        return m

    def done(self) -> bool:
        return self.peek() == ""


def _factor(sc: _Scanner) -> Optional[GeneratorSymbol]:
    start = sc.pos
    m = sc.match(_FACTOR)
    if m is None:
        return None
    side, index, row_size, col_size = m.groups()
    shape, size = (COLUMN, col_size) if col_size is not None else (ROW, row_size or "1")
    try:
        return GeneratorSymbol(side, int(index), shape, int(size))
    except UnknownGenerator as exc:
        raise ParseError(str(exc), start) from None


def _term(sc: _Scanner) -> Tuple[Fraction, Word]:
    coeff = Fraction(1)
    start = sc.pos
    m = sc.match(_COEFF)
    if m is not None:
        num, den = m.groups()
        if den is not None and int(den) == 0:
            raise ParseError("zero denominator", start)
        coeff = Fraction(int(num), int(den or 1))
        if not sc.take("*"):
            return coeff, ()
    factors = []
    while True:
        sym = _factor(sc)
        if sym is None:
            break
        factors.append(sym)
    if not factors:
        sc.skip()
        raise ParseError("expected a generator such as P1^(2)", sc.pos)
    return coeff, tuple(factors)


def parse_expression(text: str) -> List[Tuple[Fraction, Word]]:
    """Parse into a list of (coefficient, generator word); raises ParseError."""
    sc = _Scanner(text)
    if sc.done():
        raise ParseError("empty expression", 0)
    sign = -1 if sc.take("-") else 1
    terms = []
    while True:
        coeff, word = _term(sc)
        terms.append((sign * coeff, word))
        if sc.done():
            return terms
        if sc.take("+"):
            sign = 1
        elif sc.take("-"):
            sign = -1
        else:
            raise ParseError(f"unexpected {sc.peek()!r}", sc.pos)
