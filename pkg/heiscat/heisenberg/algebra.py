"""
The Heisenberg algebra h_B
==========================
Generators P_i^(n), P_i^[1^n], Q_i^(n), Q_i^[1^n] for a chosen family of
degree-zero idempotents e_1..e_l of B.  The P's commute among themselves, as
do the Q's; a Q standing left of a P is rewritten by

    Q_i^(n) P_j^(m) = sum_k c_k P_j^(m-k) Q_i^(n-k)

with c_k = grdim S^k(e_i B e_j) when both shapes agree and grdim
Lambda^k(e_i B e_j) when they differ.  Elements are stored normal ordered:
a sorted P-monomial times a sorted Q-monomial, with QPiLaurent coefficients.

Indices flagged type Q identify row and column shapes, and their even sizes
are rewritten through the even-reduction polynomials.

Usage
-----
    from heiscat.algebra.frobenius import builtin
    from heiscat.heisenberg.algebra import HeisenbergAlgebra, symbol

    H = HeisenbergAlgebra(builtin("trivial"))
    x = H.word([symbol("Q", 1, 1), symbol("P", 1, 1)])
    print(H.normal_order(x))             # P1^(1) Q1^(1) + 1
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from heiscat.algebra.coeff import QPiLaurent
from heiscat.algebra.frobenius import FrobeniusAlgebra, Vector
from heiscat.algebra.wreath import COLUMN, ROW, check_idempotent
from heiscat.errors import IndexOutOfRange, NotEven, NotTypeQ, UnknownGenerator
from heiscat.heisenberg.pairing import EXT, SYM, pairing

log = logging.getLogger(__name__)

# (shape of P generators, shape of Q generators)
PRESENTATIONS: Dict[str, Tuple[str, str]] = {
    "n,n": (ROW, ROW),
    "1n,1n": (COLUMN, COLUMN),
    "n,1n": (ROW, COLUMN),
    "1n,n": (COLUMN, ROW),
}
LEFTMOST, RIGHTMOST = "leftmost", "rightmost"


@dataclass(frozen=True)
class GeneratorSymbol:
    side: str
    index: int
    shape: str
    size: int

    def __post_init__(self):
        if self.side not in ("P", "Q"):
            raise UnknownGenerator(f"side must be P or Q, got {self.side!r}")
        if self.shape not in (ROW, COLUMN):
            raise UnknownGenerator(f"shape must be {ROW!r} or {COLUMN!r}, got {self.shape!r}")
        if self.size < 1:
            raise UnknownGenerator(f"generator size must be positive, got {self.size}")

    @property
    def sort_key(self) -> Tuple[int, int, int]:
        return self.index, 0 if self.shape == ROW else 1, self.size

    def resized(self, size: int) -> Optional["GeneratorSymbol"]:
        return replace(self, size=size) if size else None

    def __str__(self) -> str:
        if self.shape == ROW:
            return f"{self.side}{self.index}^({self.size})"
        return f"{self.side}{self.index}^[1^{self.size}]"


def symbol(side: str, index: int, size: int, shape: str = ROW) -> GeneratorSymbol:
    return GeneratorSymbol(side, index, shape, size)


Monomial = Tuple[GeneratorSymbol, ...]
Key = Tuple[Monomial, Monomial]
Word = Tuple[GeneratorSymbol, ...]


def _sorted(symbols: Iterable[GeneratorSymbol]) -> Monomial:
    return tuple(sorted(symbols, key=lambda s: s.sort_key))


def _add(bucket: Dict, key, value: QPiLaurent) -> None:
    total = bucket.get(key, QPiLaurent.zero()) + value
    if total.is_zero():
        bucket.pop(key, None)
    else:
        bucket[key] = total


class HeisenbergElement:
    """A normal-ordered element: {(P-monomial, Q-monomial): coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Key, QPiLaurent]] = None):
        self.terms: Dict[Key, QPiLaurent] = {}
        for (p, q), c in (terms or {}).items():
            _add(self.terms, (_sorted(p), _sorted(q)), c)

    @classmethod
    def one(cls) -> "HeisenbergElement":
        return cls({((), ()): QPiLaurent.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "HeisenbergElement") -> "HeisenbergElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add(out, k, c)
        return HeisenbergElement(out)

    def __neg__(self) -> "HeisenbergElement":
        return self.scale(-1)

    def __sub__(self, other: "HeisenbergElement") -> "HeisenbergElement":
        return self + (-other)

    def scale(self, c) -> "HeisenbergElement":
        c = c if isinstance(c, QPiLaurent) else QPiLaurent.scalar(c)
        return HeisenbergElement({k: v * c for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, HeisenbergElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def symbols(self) -> List[GeneratorSymbol]:
        return sorted({s for p, q in self.terms for s in p + q}, key=lambda s: (s.side, s.sort_key))

    def q_free(self) -> "HeisenbergElement":
        """The terms with an empty Q-part."""
        return HeisenbergElement({k: c for k, c in self.terms.items() if not k[1]})

    def words(self) -> List[Tuple[QPiLaurent, Word]]:
        return [(c, p + q) for (p, q), c in self.ordered_terms()]

    def ordered_terms(self) -> List[Tuple[Key, QPiLaurent]]:
        def order(item):
            (p, q), _ = item
            return -len(p + q), [s.sort_key for s in p], [s.sort_key for s in q]
        return sorted(self.terms.items(), key=order)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (p, q), c in self.ordered_terms():
            mono = " ".join(str(s) for s in p + q)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            elif len(c.terms) == 1 and (0, 0) in c.terms:
                parts.append(f"{c}*{mono}")
            else:
                parts.append(f"({c})*{mono}")
        text = parts[0]
        for part in parts[1:]:
            text += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return text

    def __repr__(self) -> str:
        return f"HeisenbergElement({self})"


Expression = Union[HeisenbergElement, Sequence[Tuple[object, Word]]]


class HeisenbergAlgebra:
    """h_B for an algebra, an idempotent family and a set of type-Q indices.

    ``idempotents`` defaults to the unit of B; indices are 1-based.
    """

    def __init__(self, alg: FrobeniusAlgebra, idempotents: Optional[Sequence[Vector]] = None,
                 type_q: Iterable[int] = ()):
        self.alg = alg
        self.idempotents: List[Vector] = [dict(e) for e in (idempotents or [alg.unit])]
        for e in self.idempotents:
            check_idempotent(alg, e)
        self.type_q: FrozenSet[int] = frozenset(type_q)
        for i in self.type_q:
            self._check_index(i)

    def __repr__(self) -> str:
        return f"HeisenbergAlgebra({self.alg.name!r}, l={len(self.idempotents)}, type_q={sorted(self.type_q)})"

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= len(self.idempotents):
            raise IndexOutOfRange(f"idempotent index {i} outside 1..{len(self.idempotents)}")

    # -- structure constants ------------------------------------------------
    def pairing(self, i: int, j: int, k: int, shape: str = SYM) -> QPiLaurent:
        self._check_index(i)
        self._check_index(j)
        return _pairing_cached(self.alg, _items(self.idempotents[i - 1]), _items(self.idempotents[j - 1]), k, shape)

    def canonical(self, s: GeneratorSymbol) -> GeneratorSymbol:
        """Type-Q indices carry a single shape; store it as a row."""
        self._check_index(s.index)
        return replace(s, shape=ROW) if s.index in self.type_q else s

    # -- construction -------------------------------------------------------
    def word(self, symbols: Sequence[GeneratorSymbol], coeff=1) -> List[Tuple[QPiLaurent, Word]]:
        c = coeff if isinstance(coeff, QPiLaurent) else QPiLaurent.scalar(coeff)
        return [(c, tuple(symbols))]

    def generator(self, s: GeneratorSymbol) -> HeisenbergElement:
        s = self.canonical(s)
        if s.index in self.type_q and s.size % 2 == 0:
            return self.even_reduce(s)
        side = ((s,), ()) if s.side == "P" else ((), (s,))
        return HeisenbergElement({side: QPiLaurent.one()})

    # -- even reduction -----------------------------------------------------
    def even_reduce(self, s: GeneratorSymbol) -> HeisenbergElement:
        """X^(2m) = 1/2 (-1)^(m-1) (X^(m))^2 + sum_{r<m} (-1)^(r-1) X^(r) X^(2m-r), fully reduced."""
        s = self.canonical(s)
        if s.index not in self.type_q:
            raise NotTypeQ(f"{s} does not have a type-Q index")
        if s.size % 2:
            raise NotEven(f"{s} has odd size")
        out: Dict[Key, QPiLaurent] = {}
        for sizes, c in _even_polynomial(s.size).items():
            mono = tuple(replace(s, size=n) for n in sizes)
            key = (mono, ()) if s.side == "P" else ((), mono)
            _add(out, key, QPiLaurent.scalar(c))
        return HeisenbergElement(out)

    def _expand_even(self, word: Word) -> Optional[List[Tuple[Fraction, Word]]]:
        for t, s in enumerate(word):
            if s.index in self.type_q and s.size % 2 == 0:
                return [(c, word[:t] + tuple(replace(s, size=n) for n in sizes) + word[t + 1:])
                        for sizes, c in _even_polynomial(s.size).items()]
        return None

    # -- normal ordering ----------------------------------------------------
    def relation_coefficient(self, q: GeneratorSymbol, p: GeneratorSymbol, k: int, presentation: str) -> QPiLaurent:
        p_shape, q_shape = PRESENTATIONS[presentation]
        kind = SYM if p_shape == q_shape else EXT
        return self.pairing(q.index, p.index, k, kind)

    def _check_presentation(self, word: Word, presentation: str) -> Word:
        if presentation not in PRESENTATIONS:
            raise UnknownGenerator(f"unknown presentation {presentation!r}; known: {', '.join(PRESENTATIONS)}")
        p_shape, q_shape = PRESENTATIONS[presentation]
        out = []
        for s in word:
            s = self.canonical(s)
            wanted = p_shape if s.side == "P" else q_shape
            if s.index not in self.type_q and s.shape != wanted:
                raise UnknownGenerator(f"{s} is not a generator of the {presentation} presentation")
            out.append(s)
        return tuple(out)

    def normal_order(self, x: Expression, presentation: str = "n,n", strategy: str = LEFTMOST) -> HeisenbergElement:
        """Rewrite every Q-before-P pair until all P's stand left of all Q's.

        ``strategy`` picks which inversion is rewritten first; the result
        does not depend on it.
        """
        pending: Dict[Word, QPiLaurent] = {}
        for c, word in _as_words(x):
            c = c if isinstance(c, QPiLaurent) else QPiLaurent.scalar(c)
            _add(pending, self._check_presentation(word, presentation), c)
        done: Dict[Key, QPiLaurent] = {}
        steps = 0
        while pending:
            word, c = pending.popitem()
            expanded = self._expand_even(word)
            if expanded is not None:
                for c2, w2 in expanded:
                    _add(pending, w2, c * QPiLaurent.scalar(c2))
                continue
            t = _inversion(word, strategy)
            if t is None:
                p = tuple(s for s in word if s.side == "P")
                q = tuple(s for s in word if s.side == "Q")
                _add(done, (_sorted(p), _sorted(q)), c)
                continue
            steps += 1
            q_sym, p_sym = word[t], word[t + 1]
            for k in range(min(q_sym.size, p_sym.size) + 1):
                coeff = self.relation_coefficient(q_sym, p_sym, k, presentation)
                if coeff.is_zero():
                    continue
                middle = tuple(s for s in (p_sym.resized(p_sym.size - k), q_sym.resized(q_sym.size - k)) if s)
                _add(pending, word[:t] + middle + word[t + 2:], c * coeff)
        log.debug("normal ordering took %d rewrites", steps)
        return HeisenbergElement(done)

    def multiply(self, a: HeisenbergElement, b: HeisenbergElement, presentation: str = "n,n") -> HeisenbergElement:
        words = [(ca * cb, wa + wb) for ca, wa in a.words() for cb, wb in b.words()]
        return self.normal_order(words, presentation)

    # -- coproduct, Fock space, involution -----------------------------------
    def coproduct_generator(self, s: GeneratorSymbol) -> List[Tuple[Optional[GeneratorSymbol], Optional[GeneratorSymbol]]]:
        """Delta(X^(n)) = sum_{k=0}^n X^(n-k) (x) X^(k); None stands for the unit."""
        s = self.canonical(s)
        return [(s.resized(s.size - k), s.resized(k)) for k in range(s.size + 1)]

    def fock_apply(self, h: Expression, v: HeisenbergElement, presentation: str = "n,n") -> HeisenbergElement:
        """h . v in the Fock space: normal order h v and drop every term with a Q."""
        if any(q for p, q in v.terms):
            raise UnknownGenerator("Fock vectors must be polynomials in the P generators")
        h_words = h.words() if isinstance(h, HeisenbergElement) else list(h)
        words = [(ch * cv, wh + wv) for ch, wh in h_words for cv, wv in v.words()]
        return self.normal_order(words, presentation).q_free()

    def omega(self, x: HeisenbergElement) -> HeisenbergElement:
        """Swap row and column shapes on every generator."""
        out: Dict[Key, QPiLaurent] = {}
        for (p, q), c in x.terms.items():
            _add(out, (_sorted(self._flip(s) for s in p), _sorted(self._flip(s) for s in q)), c)
        return HeisenbergElement(out)

    def omega_words(self, x: Expression) -> List[Tuple[object, Word]]:
        """omega applied letter by letter, without reordering."""
        return [(c, tuple(self._flip(s) for s in w)) for c, w in _as_words(x)]

    def _flip(self, s: GeneratorSymbol) -> GeneratorSymbol:
        if s.index in self.type_q:
            return s
        return replace(s, shape=COLUMN if s.shape == ROW else ROW)


def omega_presentation(presentation: str) -> str:
    p_shape, q_shape = PRESENTATIONS[presentation]
    flip = {ROW: COLUMN, COLUMN: ROW}
    return next(k for k, v in PRESENTATIONS.items() if v == (flip[p_shape], flip[q_shape]))


def _items(f: Vector) -> Tuple[Tuple[int, Fraction], ...]:
    return tuple(sorted(f.items()))


@lru_cache(maxsize=None)
def _pairing_cached(alg: FrobeniusAlgebra, f_items, g_items, k: int, shape: str) -> QPiLaurent:
    return pairing(alg, dict(f_items), dict(g_items), k, shape)


@lru_cache(maxsize=None)
def _even_polynomial(size: int) -> Dict[Tuple[int, ...], Fraction]:
    """X^(size) for even size as a polynomial in odd sizes: {sorted sizes: coefficient}."""
    m = size // 2
    raw: List[Tuple[Fraction, Tuple[int, ...]]] = [(Fraction((-1) ** (m - 1), 2), (m, m))]
    raw += [(Fraction((-1) ** (r - 1)), (r, size - r)) for r in range(1, m)]
    out: Dict[Tuple[int, ...], Fraction] = {}
    for c, sizes in raw:
        expansions: List[Tuple[Fraction, Tuple[int, ...]]] = [(c, ())]
        for n in sizes:
            parts = _even_polynomial(n).items() if n % 2 == 0 else [((n,), Fraction(1))]
            expansions = [(c1 * c2, prefix + sub) for c1, prefix in expansions for sub, c2 in parts]
        for c2, sub in expansions:
            key = tuple(sorted(sub))
            total = out.get(key, Fraction(0)) + c2
            if total:
                out[key] = total
            else:
                out.pop(key, None)
    return out


def _inversion(word: Word, strategy: str) -> Optional[int]:
    positions = [t for t in range(len(word) - 1) if word[t].side == "Q" and word[t + 1].side == "P"]
    if not positions:
        return None
    if strategy == LEFTMOST:
        return positions[0]
    if strategy == RIGHTMOST:
        return positions[-1]
    raise ValueError(f"strategy must be {LEFTMOST!r} or {RIGHTMOST!r}")


def _as_words(x: Expression) -> List[Tuple[object, Word]]:
    if isinstance(x, HeisenbergElement):
        return [(c, w) for c, w in x.words()]
    return [(c, tuple(w)) for c, w in x]
