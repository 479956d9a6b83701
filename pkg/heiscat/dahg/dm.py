"""
The algebra D_m
===============
D_m = F[x_1..x_m] (x) A_m^op, where the x_i have degree (delta, sigma) and
supercommute, and A_m^op is the super-opposite of the wreath product
algebra: [u][v] = (-1)^{|u||v|} [v u].  Every element is kept in PBW form

    x_1^{a_1} ... x_m^{a_m} [u],     u a basis key (tensor, perm) of A_m,

and products are rewritten back into that form by the defining relations

    x_i [b_1 (x) ... (x) b_m] = (-1)^{sigma(|b_1|+..+|b_m|)} [.. psi(b_i) ..] x_i
    x_i s_i = s_i x_{i+1} + C_i
    s_i x_i = x_{i+1} s_i + C'_i
    s_i x_j = x_j s_i                (j != i, i+1)
    x_j x_i = (-1)^sigma x_i x_j     (i < j)

with C_i = sum_b (-1)^{sigma(|b|+1)} b^v (x) b and C'_i = sum_b (-1)^{|b|+sigma}
b (x) b^v in slots i, i+1.  For B = F this is the degenerate affine Hecke
algebra with x_1 s_1 = s_1 x_2 + 1.

Usage
-----
    from heiscat.algebra.frobenius import builtin
    from heiscat.dahg import dm

    B = builtin("trivial")
    x1, x2, s1 = dm.x(B, 2, 1), dm.x(B, 2, 2), dm.s(B, 2, 1)
    s1 * x2 == x1 * s1 - dm.one(B, 2)      # True
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple

from heiscat import config
from heiscat.algebra import wreath
from heiscat.algebra.frobenius import FrobeniusAlgebra, Vector, add_into
from heiscat.algebra.wreath import Key, WreathElement
from heiscat.errors import IndexOutOfRange, RankMismatch, SizeLimit

log = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
PbwKey = Tuple[Exponents, Key]


class DmElement:
    """A PBW-ordered element of D_m: {(exponents, A_m key): coefficient}."""

    __slots__ = ("alg", "m", "_terms")

    def __init__(self, alg: FrobeniusAlgebra, m: int, terms: Optional[Dict[PbwKey, Fraction]] = None):
        if m < 1:
            raise IndexOutOfRange(f"D_m needs m >= 1, got {m}")
        self.alg = alg
        self.m = m
        self._terms: Dict[PbwKey, Fraction] = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    def items(self) -> List[Tuple[PbwKey, Fraction]]:
        return sorted(self._terms.items())

    @property
    def terms(self) -> Dict[PbwKey, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def _check(self, other: "DmElement") -> None:
        if other.m != self.m or other.alg is not self.alg:
            raise RankMismatch(f"cannot combine elements of D_{self.m} and D_{other.m}")

    def __add__(self, other: "DmElement") -> "DmElement":
        self._check(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            add_into(out, k, v)
        return DmElement(self.alg, self.m, out)

    def __neg__(self) -> "DmElement":
        return self.scale(-1)

    def __sub__(self, other: "DmElement") -> "DmElement":
        return self + (-other)

    def scale(self, c) -> "DmElement":
        c = Fraction(c)
        return DmElement(self.alg, self.m, {k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c) -> "DmElement":
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, DmElement):
            return dm_multiply(self, other)
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DmElement):
            return NotImplemented
        return self.m == other.m and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.m, frozenset(self._terms.items())))

    def x_degree(self) -> int:
        return max((sum(e) for (e, _), _ in self._terms.items()), default=0)

    def parity(self) -> int:
        """Parity of a homogeneous element."""
        parities = {pbw_parity(self.alg, k) for k in self._terms}
        return parities.pop() if len(parities) == 1 else 0

    def format(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (exps, (t, p)), c in self.items():
            xs = " ".join(f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(exps, 1) if a)
            tensor = "(x)".join(self.alg.labels[b] for b in t)
            perm = "" if p == wreath.identity_perm(self.m) else f"[{''.join(map(str, p))}]"
            body = " ".join(s for s in (xs, f"{tensor}{perm}") if s)
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"DmElement(m={self.m}, {self.format()})"


def pbw_parity(alg: FrobeniusAlgebra, key: PbwKey) -> int:
    exps, (t, _) = key
    return (alg.sigma * sum(exps) + wreath.tensor_parity(alg, t)) % 2


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def _zero_exps(m: int) -> Exponents:
    return (0,) * m


def from_wreath(u: WreathElement) -> DmElement:
    """The element [u] of the A_m^op factor."""
    return DmElement(u.alg, u.n, {(_zero_exps(u.n), k): c for k, c in u.items()})


def one(alg: FrobeniusAlgebra, m: int) -> DmElement:
    return from_wreath(wreath.one(alg, m))


def x(alg: FrobeniusAlgebra, m: int, i: int, power: int = 1) -> DmElement:
    if not 1 <= i <= m:
        raise IndexOutOfRange(f"x_{i} outside x_1..x_{m}")
    exps = tuple(power if j == i else 0 for j in range(1, m + 1))
    return DmElement(alg, m, {(exps, k): c for k, c in wreath.one(alg, m).items()})


def s(alg: FrobeniusAlgebra, m: int, i: int) -> DmElement:
    if not 1 <= i < m:
        raise IndexOutOfRange(f"s_{i} outside s_1..s_{m - 1}")
    return from_wreath(wreath.from_perm(alg, wreath.simple(i, m)))


def dot(alg: FrobeniusAlgebra, m: int, b: Vector, i: int) -> DmElement:
    return from_wreath(wreath.dot(alg, b, i, m))


def monomial(alg: FrobeniusAlgebra, exps: Exponents, key: Key, coeff=1) -> DmElement:
    return DmElement(alg, len(exps), {(tuple(exps), key): Fraction(coeff)})


def exponent_vectors(m: int, cap: int) -> Iterator[Exponents]:
    """All a in N^m with a_1 + .. + a_m <= cap, lowest total first."""
    for total in range(cap + 1):
        for exps in itertools.product(range(total + 1), repeat=m):
            if sum(exps) == total:
                yield exps


def pbw_basis(alg: FrobeniusAlgebra, m: int, cap: int) -> List[PbwKey]:
    """x(a, beta, tau) with |a| <= cap; raises SizeLimit past HEISCAT_SIZE_CAP."""
    keys = wreath.basis_keys(alg, m)
    exps = list(exponent_vectors(m, cap))
    if len(exps) * len(keys) > config.SIZE_CAP:
        raise SizeLimit(f"PBW truncation of D_{m} at x-degree {cap} has {len(exps) * len(keys)} elements "
                        f"> HEISCAT_SIZE_CAP={config.SIZE_CAP}")
    return [(e, k) for e in exps for k in keys]


# ---------------------------------------------------------------------------
# Correction terms and the A_m^op product
# ---------------------------------------------------------------------------

def correction(alg: FrobeniusAlgebra, m: int, i: int, after: bool) -> WreathElement:
    """C_i (x_i s_i = s_i x_{i+1} + C_i) or, with ``after``, C'_i (s_i x_i = x_{i+1} s_i + C'_i)."""
    total = wreath.zero(alg, m)
    for b in range(alg.dim):
        factors = [alg.unit] * m
        par = alg.parities[b]
        if after:
            factors[i - 1], factors[i] = {b: Fraction(1)}, alg.dual_basis[b]
            sign = -1 if (par + alg.sigma) % 2 else 1
        else:
            factors[i - 1], factors[i] = alg.dual_basis[b], {b: Fraction(1)}
            sign = -1 if alg.sigma and not par else 1
        total = total + wreath.from_factors(alg, factors).scale(sign)
    return total


def _split(u: WreathElement) -> Tuple[WreathElement, WreathElement]:
    even: Dict[Key, Fraction] = {}
    odd: Dict[Key, Fraction] = {}
    for key, c in u.items():
        (odd if wreath.tensor_parity(u.alg, key[0]) else even)[key] = c
    return WreathElement(u.alg, u.n, even), WreathElement(u.alg, u.n, odd)


def op_product(u: WreathElement, v: WreathElement) -> WreathElement:
    """[u][v] in A_m^op, as an element of A_m: (-1)^{|u||v|} v u."""
    _, u_odd = _split(u)
    _, v_odd = _split(v)
    return v * u - (v_odd * u_odd).scale(2)


def _nakayama_inverse_at(alg: FrobeniusAlgebra, t: wreath.Tensor, perm: wreath.Perm, j: int) -> WreathElement:
    factors = [{b: Fraction(1)} for b in t]
    factors[j - 1] = alg.nakayama_inverse(factors[j - 1])
    return wreath.from_factors(alg, factors, perm)


# ---------------------------------------------------------------------------
# Rewriting
# ---------------------------------------------------------------------------

# A pending term x_k [u]; k is None when no x is left over.
_Step = Tuple[Optional[int], WreathElement]


def _perm_word_times_x(alg: FrobeniusAlgebra, m: int, word: Tuple[int, ...], j: int) -> List[_Step]:
    """s_{w_1} ... s_{w_r} x_j (product in D_m) as a sum of x_k [q] and [q]."""
    if not word:
        return [(j, wreath.one(alg, m))]
    *prefix, last = word
    s_last = wreath.from_perm(alg, wreath.simple(last, m))
    if j == last + 1:
        inner = [(last, s_last), (None, -correction(alg, m, last, after=False))]
    elif j == last:
        inner = [(last + 1, s_last), (None, correction(alg, m, last, after=True))]
    else:
        inner = [(j, s_last)]
    prefix_elem = wreath.one(alg, m)
    for a in prefix:
        prefix_elem = op_product(prefix_elem, wreath.from_perm(alg, wreath.simple(a, m)))
    out: List[_Step] = []
    for k, r in inner:
        if k is None:
            out.append((None, op_product(prefix_elem, r)))
            continue
        for k2, q in _perm_word_times_x(alg, m, tuple(prefix), k):
            out.append((k2, op_product(q, r)))
    return out


def _basis_times_x(alg: FrobeniusAlgebra, m: int, key: Key, j: int) -> List[_Step]:
    """[t tau] x_j, using [t tau] = [tau][t] and x_j moving left through both."""
    t, perm = key
    sign = -1 if alg.sigma and wreath.tensor_parity(alg, t) else 1
    moved = _nakayama_inverse_at(alg, t, wreath.identity_perm(m), j).scale(sign)
    word = tuple(reversed(wreath.reduced_word(perm)))
    return [(k, op_product(q, moved)) for k, q in _perm_word_times_x(alg, m, word, j)]


def _element_times_x(u: WreathElement, j: int) -> List[_Step]:
    out: List[_Step] = []
    for key, c in u.items():
        out.extend((k, q.scale(c)) for k, q in _basis_times_x(u.alg, u.n, key, j))
    return out


def _x_sign(alg: FrobeniusAlgebra, k: int, exps: Exponents) -> int:
    """x_k x^a = sign * x^{a + e_k}."""
    return -1 if alg.sigma and sum(exps[:k - 1]) % 2 else 1


def _bump(exps: Exponents, k: int) -> Exponents:
    return exps[:k - 1] + (exps[k - 1] + 1,) + exps[k:]


def _a_times_xword(u: WreathElement, xs: Tuple[int, ...]) -> Dict[Exponents, WreathElement]:
    """[u] x_{j_1} ... x_{j_r} in PBW form: {exponents: A_m part}."""
    m = u.n
    if not xs:
        return {_zero_exps(m): u} if u else {}
    out: Dict[Exponents, WreathElement] = {}
    for k, w in _element_times_x(u, xs[0]):
        if not w:
            continue
        for exps, rest in _a_times_xword(w, xs[1:]).items():
            if k is not None:
                rest = rest.scale(_x_sign(u.alg, k, exps))
                exps = _bump(exps, k)
            out[exps] = out[exps] + rest if exps in out else rest
    return {e: v for e, v in out.items() if v}


def _merge_sign(alg: FrobeniusAlgebra, left: Exponents, right: Exponents) -> int:
    """x^left x^right = sign * x^{left + right}."""
    if not alg.sigma:
        return 1
    swaps = sum(right[k] * sum(left[k + 1:]) for k in range(len(right)))
    return -1 if swaps % 2 else 1


def _xword(exps: Exponents) -> Tuple[int, ...]:
    return tuple(i for i, a in enumerate(exps, 1) for _ in range(a))


def dm_multiply(a: DmElement, b: DmElement) -> DmElement:
    """a b rewritten to PBW form; raises RankMismatch for different m."""
    a._check(b)
    alg, m = a.alg, a.m
    out: Dict[PbwKey, Fraction] = {}
    for (ea, ka), ca in a.items():
        ua = wreath.from_key(alg, *ka)
        for (eb, kb), cb in b.items():
            ub = wreath.from_key(alg, *kb)
            for ec, w in _a_times_xword(ua, _xword(eb)).items():
                sign = _merge_sign(alg, ea, ec)
                exps = tuple(p + q for p, q in zip(ea, ec))
                for key, c in op_product(w, ub).items():
                    add_into(out, (exps, key), sign * ca * cb * c)
    return DmElement(alg, m, out)
