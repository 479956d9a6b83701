"""
Coefficient rings and graded dimensions
=======================================
QPiLaurent      Laurent polynomials in q with a parity variable pi (pi^2 = 1)
                and rational coefficients.  Every graded dimension and every
                Heisenberg structure constant lives here.
GradedSuperVectorSpace
                A finite Z x Z2-graded dimension table.

Generating function for super-symmetric powers
----------------------------------------------
    sum_k t^k grdim S^k(V) = prod_n (1 - q^n t)^(-dim V[n,0]) * prod_n (1 + pi q^n t)^(dim V[n,1])

Exterior powers use S^k(V) = Lambda^k(Pi V), with the parity of the result
restored by a factor pi^k.

Usage
-----
    from heiscat.algebra.coeff import GradedSuperVectorSpace, grdim_sym_power

    V = GradedSuperVectorSpace({(0, 0): 1, (1, 0): 1})
    grdim_sym_power(V, 2)      # 1 + q + q^2
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

Scalar = Union[int, Fraction]
Monomial = Tuple[int, int]          # (q exponent, pi exponent mod 2)


class QPiLaurent:
    """Immutable element of Q[q, q^-1, pi] / (pi^2 - 1)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] = None):
        clean: Dict[Monomial, Fraction] = {}
        for (e, p), c in (terms or {}).items():
            key = (int(e), int(p) % 2)
            clean[key] = clean.get(key, Fraction(0)) + Fraction(c)
        self._terms = {k: v for k, v in clean.items() if v != 0}
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls) -> "QPiLaurent":
        return cls()

    @classmethod
    def one(cls) -> "QPiLaurent":
        return cls({(0, 0): 1})

    @classmethod
    def scalar(cls, c: Scalar) -> "QPiLaurent":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, q_exp: int = 0, pi_exp: int = 0, coeff: Scalar = 1) -> "QPiLaurent":
        return cls({(q_exp, pi_exp): coeff})

    @classmethod
    def q(cls) -> "QPiLaurent":
        return cls.monomial(1, 0)

    @classmethod
    def pi(cls) -> "QPiLaurent":
        return cls.monomial(0, 1)

    # -- mapping view -------------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, q_exp: int, pi_exp: int = 0) -> Fraction:
        return self._terms.get((q_exp, pi_exp % 2), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(k == (0, 0) for k in self._terms)

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "QPiLaurent":
        if isinstance(other, QPiLaurent):
            return other
        if isinstance(other, (int, Fraction)):
            return QPiLaurent.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return QPiLaurent(out)

    __radd__ = __add__

    def __neg__(self) -> "QPiLaurent":
        return QPiLaurent({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for (e1, p1), c1 in self._terms.items():
            for (e2, p2), c2 in other._terms.items():
                key = (e1 + e2, (p1 + p2) % 2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return QPiLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPiLaurent":
        if k < 0:
            raise ValueError("negative powers are only defined for monomials; use invert_q")
        result = QPiLaurent.one()
        for _ in range(k):
            result = result * self
        return result

    def invert_q(self) -> "QPiLaurent":
        """Substitute q -> q^-1."""
        return QPiLaurent({(-e, p): c for (e, p), c in self._terms.items()})

    def specialize(self, q: Scalar = 1, pi: Scalar = 1) -> Fraction:
        """Evaluate at rational q and pi = +-1."""
        total = Fraction(0)
        for (e, p), c in self._terms.items():
            total += c * Fraction(q) ** e * Fraction(pi) ** p
        return total

    # -- comparison / display ----------------------------------------------
    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"QPiLaurent({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for (e, p), c in sorted(self._terms.items()):
            pieces.append(_format_term(e, p, c))
        text = pieces[0]
        for piece in pieces[1:]:
            text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return text

    def to_json(self) -> List[List]:
        return [[e, p, str(c)] for (e, p), c in sorted(self._terms.items())]


def _format_term(e: int, p: int, c: Fraction) -> str:
    factors = []
    if e == 1:
        factors.append("q")
    elif e != 0:
        factors.append(f"q^{e}")
    if p:
        factors.append("pi")
    body = "*".join(factors)
    if not body:
        return str(c)
    if c == 1:
        return body
    if c == -1:
        return f"-{body}"
    return f"{c}*{body}"


# ---------------------------------------------------------------------------
# Graded super vector spaces
# ---------------------------------------------------------------------------

class GradedSuperVectorSpace:
    """Dimension table {(degree, parity): dim}; immutable."""

    __slots__ = ("_dims",)

    def __init__(self, dims: Mapping[Tuple[int, int], int] = None):
        clean: Dict[Tuple[int, int], int] = {}
        for (d, p), n in (dims or {}).items():
            if n < 0:
                raise ValueError(f"negative dimension {n} at {(d, p)}")
            key = (int(d), int(p) % 2)
            clean[key] = clean.get(key, 0) + int(n)
        self._dims = {k: v for k, v in clean.items() if v}

    @classmethod
    def from_basis(cls, gradings: Iterable[Tuple[int, int]]) -> "GradedSuperVectorSpace":
        dims: Dict[Tuple[int, int], int] = {}
        for key in gradings:
            dims[key] = dims.get(key, 0) + 1
        return cls(dims)

    @property
    def dims(self) -> Dict[Tuple[int, int], int]:
        return dict(self._dims)

    def dim(self) -> int:
        return sum(self._dims.values())

    def basis_gradings(self) -> List[Tuple[int, int]]:
        """One (degree, parity) per basis vector, in sorted order."""
        out: List[Tuple[int, int]] = []
        for key in sorted(self._dims):
            out.extend([key] * self._dims[key])
        return out

    def parity_shift(self) -> "GradedSuperVectorSpace":
        return GradedSuperVectorSpace({(d, p + 1): n for (d, p), n in self._dims.items()})

    def __add__(self, other: "GradedSuperVectorSpace") -> "GradedSuperVectorSpace":
        dims = dict(self._dims)
        for k, v in other._dims.items():
            dims[k] = dims.get(k, 0) + v
        return GradedSuperVectorSpace(dims)

    def __mul__(self, other: "GradedSuperVectorSpace") -> "GradedSuperVectorSpace":
        dims: Dict[Tuple[int, int], int] = {}
        for (d1, p1), n1 in self._dims.items():
            for (d2, p2), n2 in other._dims.items():
                key = (d1 + d2, (p1 + p2) % 2)
                dims[key] = dims.get(key, 0) + n1 * n2
        return GradedSuperVectorSpace(dims)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedSuperVectorSpace) and self._dims == other._dims

    def __hash__(self) -> int:
        return hash(frozenset(self._dims.items()))

    def __repr__(self) -> str:
        return f"GradedSuperVectorSpace({dict(sorted(self._dims.items()))})"


def grdim(V: GradedSuperVectorSpace) -> QPiLaurent:
    return QPiLaurent({(d, p): n for (d, p), n in V.dims.items()})


def grdim_sym_power(V: GradedSuperVectorSpace, k: int) -> QPiLaurent:
    """Coefficient of t^k in the super-symmetric generating function."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    # series[j] = coefficient of t^j, truncated at t^k
    series: List[QPiLaurent] = [QPiLaurent.one()] + [QPiLaurent.zero()] * k
    for (d, p), n in sorted(V.dims.items()):
        factor: List[QPiLaurent] = []
        for j in range(k + 1):
            if p == 0:
                count = comb(n + j - 1, j)
                factor.append(QPiLaurent.monomial(d * j, 0, count))
            else:
                factor.append(QPiLaurent.monomial(d * j, j, comb(n, j)))
        series = _truncated_product(series, factor, k)
    return series[k]


def grdim_ext_power(V: GradedSuperVectorSpace, k: int) -> QPiLaurent:
    """grdim Lambda^k(V) = pi^k grdim S^k(Pi V)."""
    return QPiLaurent.monomial(0, k % 2) * grdim_sym_power(V.parity_shift(), k)


def _truncated_product(a: List[QPiLaurent], b: List[QPiLaurent], k: int) -> List[QPiLaurent]:
    out = [QPiLaurent.zero() for _ in range(k + 1)]
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j in range(k + 1 - i):
            if not b[j].is_zero():
                out[i + j] = out[i + j] + x * b[j]
    return out


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------

def brute_force_power(V: GradedSuperVectorSpace, k: int, exterior: bool = False) -> QPiLaurent:
    """grdim of V^(x)k modulo the (anti)symmetrizing relations, by exact rank.

    Relations are v - s_i.v (symmetric) or v + s_i.v (exterior) for adjacent
    transpositions s_i, with the Koszul sign of the swap.  Each graded piece
    is row-reduced separately.
    """
    from heiscat.algebra.linalg import rank_of_rows

    gradings = V.basis_gradings()
    if k == 0:
        return QPiLaurent.one()
    tuples = list(product(range(len(gradings)), repeat=k))
    pieces: Dict[Tuple[int, int], List[Tuple[int, ...]]] = {}
    for t in tuples:
        deg = sum(gradings[i][0] for i in t)
        par = sum(gradings[i][1] for i in t) % 2
        pieces.setdefault((deg, par), []).append(t)

    result: Dict[Tuple[int, int], int] = {}
    for key, members in pieces.items():
        index = {t: pos for pos, t in enumerate(members)}
        rows: List[Dict[int, Fraction]] = []
        for t in members:
            for i in range(k - 1):
                swapped = t[:i] + (t[i + 1], t[i]) + t[i + 2:]
                sign = -1 if gradings[t[i]][1] and gradings[t[i + 1]][1] else 1
                if exterior:
                    sign = -sign
                row: Dict[int, Fraction] = {index[t]: Fraction(1)}
                pos = index[swapped]
                row[pos] = row.get(pos, Fraction(0)) - sign
                row = {c: v for c, v in row.items() if v != 0}
                if row:
                    rows.append(row)
        result[key] = len(members) - rank_of_rows(rows, len(members))
    return QPiLaurent({key: n for key, n in result.items()})
