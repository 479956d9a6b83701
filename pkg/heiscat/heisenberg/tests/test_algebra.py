"""
Tests for the Heisenberg algebra h_B
====================================
Normal ordering in each presentation, the pairing against its brute-force
oracle, type-Q even reduction, the omega involution and the Fock space.

Run: pytest heiscat/heisenberg/tests/test_algebra.py -v
"""

from fractions import Fraction

import pytest

from heiscat.algebra.coeff import QPiLaurent
from heiscat.algebra.frobenius import builtin
from heiscat.algebra.wreath import COLUMN
from heiscat.errors import IndexOutOfRange, NotEven, NotIdempotent, NotTypeQ, UnknownGenerator
from heiscat.heisenberg.algebra import (
    LEFTMOST,
    RIGHTMOST,
    HeisenbergAlgebra,
    HeisenbergElement,
    omega_presentation,
    symbol,
)
from heiscat.heisenberg.pairing import EXT, SYM, oracle_pairing, pairing
from heiscat.heisenberg.parser import parse_expression


# ──────────────────────────────────────────────
# Helpers
# ──────────────────────────────────────────────

q = QPiLaurent.q()

P1, Q1 = symbol("P", 1, 1), symbol("Q", 1, 1)
P2, Q2 = symbol("P", 1, 2), symbol("Q", 1, 2)


def _element(*pairs):
    """HeisenbergElement from (coefficient, P symbols, Q symbols) triples."""
    return HeisenbergElement({(p, qq): QPiLaurent.scalar(c) if not isinstance(c, QPiLaurent) else c
                              for c, p, qq in pairs})


# ──────────────────────────────────────────────
# Normal ordering
# ──────────────────────────────────────────────

def test_ground_field_commutator(trivial):
    H = HeisenbergAlgebra(trivial)
    x = H.normal_order(H.word([Q1, P1]))
    assert str(x) == "P1^(1) Q1^(1) + 1"


def test_ground_field_higher_sizes(trivial):
    H = HeisenbergAlgebra(trivial)
    x = H.normal_order(H.word([Q2, P2]))
    assert x == _element((1, (P2,), (Q2,)), (1, (P1,), (Q1,)), (1, (), ()))


def test_graded_commutator(dual_numbers):
    H = HeisenbergAlgebra(dual_numbers)
    x = H.normal_order(parse_expression("Q1 P1"))
    assert x == _element((1, (P1,), (Q1,)), (1 + q, (), ()))
    assert str(x) == "P1^(1) Q1^(1) + 1 + q"


def test_already_ordered_words_are_untouched(dual_numbers):
    H = HeisenbergAlgebra(dual_numbers)
    assert H.normal_order(H.word([P2, P1, Q1])) == _element((1, (P1, P2), (Q1,)))


def test_strategies_agree(dual_numbers):
    H = HeisenbergAlgebra(dual_numbers)
    words = parse_expression("Q1^(2) Q1 P1^(2) P1 - 3*Q1 P1 Q1 P1")
    assert H.normal_order(words, strategy=LEFTMOST) == H.normal_order(words, strategy=RIGHTMOST)


def test_multiplication_is_associative(zigzag):
    H = HeisenbergAlgebra(zigzag, [zigzag.parse_element("e1"), zigzag.parse_element("e2")])
    a = H.normal_order(parse_expression("Q1 + P2"))
    b = H.normal_order(parse_expression("Q2 P1"))
    c = H.normal_order(parse_expression("P1^(2) - Q2"))
    assert H.multiply(H.multiply(a, b), c) == H.multiply(a, H.multiply(b, c))


def test_presentation_must_match_shapes(trivial):
    H = HeisenbergAlgebra(trivial)
    with pytest.raises(UnknownGenerator):
        H.normal_order(parse_expression("Q1^[1^2] P1"), "n,n")
    with pytest.raises(UnknownGenerator):
        H.normal_order(parse_expression("Q1 P1"), "n,m")
    mixed = H.normal_order(parse_expression("Q1^[1^1] P1"), "n,1n")
    assert not mixed.is_zero()


def test_mixed_presentation_uses_exterior_powers(dual_numbers):
    H = HeisenbergAlgebra(dual_numbers)
    x = H.normal_order(parse_expression("Q1^[1^2] P1^(2)"), "n,1n")
    constant = x.terms[((), ())]
    assert constant == pairing(dual_numbers, dual_numbers.unit, dual_numbers.unit, 2, EXT)
    assert constant == q


def test_unknown_strategy(trivial):
    H = HeisenbergAlgebra(trivial)
    with pytest.raises(ValueError):
        H.normal_order(H.word([Q1, P1]), strategy="middle")


# ──────────────────────────────────────────────
# Pairing
# ──────────────────────────────────────────────

@pytest.mark.parametrize("name", ["trivial", "dual_numbers", "truncated_poly_k"])
@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("shape", [SYM, EXT])
def test_pairing_matches_oracle(name, k, shape):
    B = builtin(name)
    assert pairing(B, B.unit, B.unit, k, shape) == oracle_pairing(B, B.unit, B.unit, k, shape)


@pytest.mark.parametrize("f,g", [("e1", "e2"), ("e1", "e1"), ("e2", "e1")])
def test_pairing_between_primitive_idempotents(zigzag, f, g):
    e, e2 = zigzag.parse_element(f), zigzag.parse_element(g)
    for k in (1, 2):
        assert pairing(zigzag, e, e2, k) == oracle_pairing(zigzag, e, e2, k)


def test_pairing_values(dual_numbers):
    assert pairing(dual_numbers, dual_numbers.unit, dual_numbers.unit, 2, SYM) == 1 + q + q * q
    assert pairing(dual_numbers, dual_numbers.unit, dual_numbers.unit, 0, EXT) == 1
    with pytest.raises(ValueError):
        pairing(dual_numbers, dual_numbers.unit, dual_numbers.unit, 1, "wedge")


def test_index_checks(trivial, dual_numbers):
    H = HeisenbergAlgebra(trivial)
    with pytest.raises(IndexOutOfRange):
        H.pairing(2, 1, 1)
    with pytest.raises(IndexOutOfRange):
        HeisenbergAlgebra(trivial, type_q=(3,))
    with pytest.raises(NotIdempotent):
        HeisenbergAlgebra(dual_numbers, [{1: Fraction(1)}])


# ──────────────────────────────────────────────
# Type Q
# ──────────────────────────────────────────────

def test_even_size_reduces_to_odd_sizes(trivial):
    H = HeisenbergAlgebra(trivial, type_q=(1,))
    assert H.generator(P2) == _element((Fraction(1, 2), (P1, P1), ()))
    assert H.generator(symbol("Q", 1, 3)) == _element((1, (), (symbol("Q", 1, 3),)))


def test_type_q_identifies_shapes(trivial):
    H = HeisenbergAlgebra(trivial, type_q=(1,))
    assert H.canonical(symbol("P", 1, 3, COLUMN)) == symbol("P", 1, 3)
    assert H.omega(H.generator(symbol("P", 1, 3))) == H.generator(symbol("P", 1, 3))


def test_even_reduction_inside_normal_ordering(trivial):
    H = HeisenbergAlgebra(trivial, type_q=(1,))
    direct = H.normal_order(H.word([Q2]))
    assert direct == _element((Fraction(1, 2), (), (Q1, Q1)))


def test_even_reduce_errors(trivial):
    with pytest.raises(NotTypeQ):
        HeisenbergAlgebra(trivial).even_reduce(P2)
    with pytest.raises(NotEven):
        HeisenbergAlgebra(trivial, type_q=(1,)).even_reduce(P1)


# ──────────────────────────────────────────────
# Omega, coproduct, Fock space
# ──────────────────────────────────────────────

def test_omega_is_an_involution(dual_numbers):
    H = HeisenbergAlgebra(dual_numbers)
    x = H.normal_order(parse_expression("Q1^(2) P1 + 2*P1^(2)"))
    assert H.omega(H.omega(x)) == x
    assert H.omega(x) != x


def test_omega_commutes_with_normal_ordering(dual_numbers):
    H = HeisenbergAlgebra(dual_numbers)
    words = parse_expression("Q1^(2) P1^(2) - Q1 P1")
    flipped = H.normal_order(H.omega_words(words), omega_presentation("n,n"))
    assert flipped == H.omega(H.normal_order(words, "n,n"))


def test_omega_presentation():
    assert omega_presentation("n,n") == "1n,1n"
    assert omega_presentation("n,1n") == "1n,n"


def test_coproduct(trivial):
    H = HeisenbergAlgebra(trivial)
    assert H.coproduct_generator(P2) == [(P2, None), (P1, P1), (None, P2)]


def test_fock_space(trivial):
    H = HeisenbergAlgebra(trivial)
    vacuum = HeisenbergElement.one()
    v = H.fock_apply(H.word([P1]), vacuum)
    assert H.fock_apply(H.word([Q1]), v) == vacuum
    assert H.fock_apply(H.word([Q1]), vacuum).is_zero()
    with pytest.raises(UnknownGenerator):
        H.fock_apply(H.word([P1]), H.generator(Q1))
