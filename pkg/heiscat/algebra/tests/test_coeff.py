"""
Tests for QPiLaurent and graded dimensions
==========================================
Ring laws are checked with hypothesis; the power formulas against the
exact-rank oracle on small spaces.

Run: pytest heiscat/algebra/tests/test_coeff.py -v
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heiscat.algebra.coeff import (
    GradedSuperVectorSpace,
    QPiLaurent,
    brute_force_power,
    grdim,
    grdim_ext_power,
    grdim_sym_power,
)


# ──────────────────────────────────────────────
# Helpers
# ──────────────────────────────────────────────

q, pi, one = QPiLaurent.q(), QPiLaurent.pi(), QPiLaurent.one()

laurents = st.dictionaries(
    st.tuples(st.integers(-3, 3), st.integers(0, 1)),
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    max_size=4,
).map(QPiLaurent)

EVEN_LINE = GradedSuperVectorSpace({(0, 0): 1})
ODD_LINE = GradedSuperVectorSpace({(0, 1): 1})
SMALL_SPACES = [
    EVEN_LINE,
    ODD_LINE,
    GradedSuperVectorSpace({(0, 0): 1, (1, 0): 1}),
    GradedSuperVectorSpace({(0, 0): 1, (0, 1): 1}),
    GradedSuperVectorSpace({(1, 0): 2, (2, 1): 1}),
]


# ──────────────────────────────────────────────
# QPiLaurent
# ──────────────────────────────────────────────

class TestQPiLaurent:

    def test_pi_squares_to_one(self):
        assert pi * pi == one

    def test_zero_coefficients_are_dropped(self):
        assert (q - q).is_zero()
        assert QPiLaurent({(1, 0): 0}).is_zero()

    def test_str_orders_by_exponent(self):
        assert str(one + q) == "1 + q"
        assert str(one - q) == "1 - q"
        assert str(QPiLaurent.monomial(2, 0, 2)) == "2*q^2"
        assert str(-q * pi) == "-q*pi"
        assert str(QPiLaurent()) == "0"

    def test_scalar_coercion(self):
        assert q + 1 == one + q
        assert 2 * q == q + q
        assert QPiLaurent.scalar(3) == 3

    def test_invert_q_and_specialize(self):
        x = one + q * q + pi
        assert x.invert_q() == one + QPiLaurent.monomial(-2) + pi
        assert x.specialize(q=2, pi=-1) == Fraction(4)

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError):
            q ** -1

    @given(laurents, laurents, laurents)
    @settings(max_examples=60, deadline=None)
    def test_ring_laws(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == QPiLaurent.zero()

    @given(laurents)
    @settings(max_examples=40, deadline=None)
    def test_hash_agrees_with_equality(self, a):
        assert hash(a) == hash(QPiLaurent(a.terms))


# ──────────────────────────────────────────────
# Graded dimensions
# ──────────────────────────────────────────────

class TestGradedDimensions:

    def test_grdim(self):
        V = GradedSuperVectorSpace({(0, 0): 1, (1, 1): 2})
        assert grdim(V) == one + QPiLaurent.monomial(1, 1, 2)
        assert V.dim() == 3

    def test_symmetric_square_of_two_lines(self):
        V = GradedSuperVectorSpace({(0, 0): 1, (1, 0): 1})
        assert grdim_sym_power(V, 2) == one + q + q * q

    def test_odd_line(self):
        assert grdim_sym_power(ODD_LINE, 1) == pi
        assert grdim_sym_power(ODD_LINE, 2).is_zero()
        assert grdim_ext_power(ODD_LINE, 2) == one

    def test_even_line_exterior(self):
        assert grdim_ext_power(EVEN_LINE, 1) == one
        assert grdim_ext_power(EVEN_LINE, 2).is_zero()

    def test_zeroth_power(self):
        assert grdim_sym_power(SMALL_SPACES[4], 0) == one

    def test_negative_dimension_rejected(self):
        with pytest.raises(ValueError):
            GradedSuperVectorSpace({(0, 0): -1})

    @pytest.mark.parametrize("V", SMALL_SPACES, ids=repr)
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_symmetric_power_matches_oracle(self, V, k):
        assert grdim_sym_power(V, k) == brute_force_power(V, k)

    @pytest.mark.parametrize("V", SMALL_SPACES, ids=repr)
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_exterior_power_matches_oracle(self, V, k):
        assert grdim_ext_power(V, k) == brute_force_power(V, k, exterior=True)

    def test_tensor_product_of_spaces(self):
        assert EVEN_LINE * ODD_LINE == ODD_LINE
        assert (ODD_LINE + ODD_LINE).dims == {(0, 1): 2}
