"""
Word bimodules F_n(w)
=====================
For a word w in the letters P, Q and a right label n, region labels are read
right to left: crossing a P adds one, crossing a Q subtracts one.  A letter
with right label r contributes

    P -> A_{r+1}  as an (A_{r+1}, A_r)-bimodule
    Q -> A_r      as an (A_{r-1}, A_r)-bimodule

and F_n(w) is their tensor product over the intermediate algebras.  It is zero
as soon as any label is negative.

Every factor is free as a right module (A_{r+1} over A_r with basis
R_{b,i} = s_i..s_r (1^r (x) b), A_r over itself with basis 1), so F_n(w) has
the normal form

    R^(1) (x) R^(2) (x) ... (x) R^(k) (x) a,     a in A_n

An element is a sparse dict ``{(keys, a_key): Fraction}`` where ``keys`` has
one entry per letter: ``(b, i)`` for P, ``None`` for Q.
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from heiscat import config
from heiscat.algebra import wreath
from heiscat.algebra.frobenius import FrobeniusAlgebra, add_into
from heiscat.algebra.wreath import Key, WreathElement
from heiscat.errors import RankMismatch, SizeLimit

log = logging.getLogger(__name__)

LetterKey = Optional[Tuple[int, int]]
Keys = Tuple[LetterKey, ...]
Element = Dict[Tuple[Keys, Key], Fraction]


def region_labels(word: Sequence[str], n: int) -> List[int]:
    """labels[j] is the region left of letter j; labels[-1] == n."""
    labels = [n]
    for letter in reversed(word):
        labels.append(labels[-1] + (1 if letter == "P" else -1))
    return list(reversed(labels))


class WordBimodule:
    """F_n(w) in right-free normal form."""

    def __init__(self, alg: FrobeniusAlgebra, word: Sequence[str], n: int):
        self.alg = alg
        self.word: Tuple[str, ...] = tuple(word)
        self.n = n
        self.labels = region_labels(self.word, n)
        self.is_zero = min(self.labels) < 0
        self.left_rank = self.labels[0]
        self.right_rank = n

    def __repr__(self) -> str:
        return f"WordBimodule({''.join(self.word) or '1'}, n={self.n})"

    def same_as(self, other: "WordBimodule") -> bool:
        return self.alg is other.alg and self.word == other.word and self.n == other.n

    def right_label(self, j: int) -> int:
        return self.labels[j + 1]

    # -- generators ---------------------------------------------------------
    def letter_keys(self, j: int) -> List[LetterKey]:
        if self.word[j] == "Q":
            return [None]
        r = self.right_label(j)
        return [(b, i) for b in range(self.alg.dim) for i in range(1, r + 2)]

    def generator_count(self) -> int:
        if self.is_zero:
            return 0
        count = 1
        for j, letter in enumerate(self.word):
            if letter == "P":
                count *= self.alg.dim * (self.right_label(j) + 1)
        return count

    def generator_keys(self) -> List[Keys]:
        count = self.generator_count()
        if count > config.SIZE_CAP:
            raise SizeLimit(f"{self!r} over {self.alg.name} has {count} generators > HEISCAT_SIZE_CAP")
        if self.is_zero:
            return []
        return list(itertools.product(*(self.letter_keys(j) for j in range(len(self.word)))))

    def dimension(self) -> int:
        if self.is_zero:
            return 0
        return self.generator_count() * self.alg.dim ** self.n * factorial(self.n)

    def keys_parity(self, keys: Keys) -> int:
        return sum(self.alg.parities[k[0]] for k in keys if k is not None) % 2

    def keys_degree(self, keys: Keys) -> int:
        return sum(self.alg.degrees[k[0]] for k in keys if k is not None)

    def term_grading(self, keys: Keys, akey: Key) -> Tuple[int, int]:
        t = akey[0]
        return (self.keys_degree(keys) + wreath.tensor_degree(self.alg, t),
                (self.keys_parity(keys) + wreath.tensor_parity(self.alg, t)) % 2)

    def factor(self, j: int, key: LetterKey) -> WreathElement:
        r = self.right_label(j)
        if key is None:
            return wreath.one(self.alg, r)
        return _right_generator(self.alg, key[0], key[1], r)

    def generator(self, keys: Keys) -> Element:
        """keys (x) 1_n as an element."""
        return {(keys, k): c for k, c in wreath.one(self.alg, self.n).items()}

    # -- normalization ------------------------------------------------------
    def normalize(
        self,
        factors: Sequence[WreathElement],
        start: int = 0,
        carry: Optional[WreathElement] = None,
        tail: Optional[WreathElement] = None,
    ) -> Element:
        """Bring carry * f_start (x) f_{start+1} (x) ... (x) tail into normal form.

        ``factors[j]`` belongs to letter ``start + j``; ``carry`` lives in
        A_{labels[start]}; the returned keys cover letters ``start`` onward.
        """
        if self.is_zero:
            return {}
        alg = self.alg
        if carry is None:
            carry = wreath.one(alg, self.labels[start])
        if carry.n != self.labels[start]:
            raise RankMismatch(f"carry in A_{carry.n} cannot act on region {self.labels[start]}")
        states: Dict[Keys, WreathElement] = {(): carry}
        for offset, x in enumerate(factors):
            j = start + offset
            r = self.right_label(j)
            nxt: Dict[Keys, Dict[Key, Fraction]] = {}
            for keys, c in states.items():
                if self.word[j] == "P":
                    z = c * x
                    for key, coeff in z.items():
                        sign, lkey, rest = wreath.right_decompose(alg, key)
                        add_into(nxt.setdefault(keys + (lkey,), {}), rest, sign * coeff)
                else:
                    z = c.embed() * x
                    bucket = nxt.setdefault(keys + (None,), {})
                    for key, coeff in z.items():
                        add_into(bucket, key, coeff)
            states = {k: WreathElement(alg, r, v) for k, v in nxt.items() if v}
        if tail is None:
            tail = wreath.one(alg, self.n)
        out: Element = {}
        for keys, c in states.items():
            for akey, coeff in (c * tail).items():
                add_into(out, (keys, akey), coeff)
        return out

    def factors_of(self, keys: Keys, start: int = 0) -> List[WreathElement]:
        return [self.factor(start + j, k) for j, k in enumerate(keys)]

    # -- actions ------------------------------------------------------------
    def left_act(self, a: WreathElement, elem: Element) -> Element:
        if a.n != self.left_rank:
            raise RankMismatch(f"A_{a.n} does not act on the left of {self!r}")
        out: Element = {}
        for (keys, akey), c in elem.items():
            tail = WreathElement(self.alg, self.n, {akey: Fraction(1)})
            for k, v in self.normalize(self.factors_of(keys), carry=a, tail=tail).items():
                add_into(out, k, c * v)
        return out

    def right_act(self, elem: Element, a: WreathElement) -> Element:
        if a.n != self.n:
            raise RankMismatch(f"A_{a.n} does not act on the right of {self!r}")
        out: Element = {}
        for (keys, akey), c in elem.items():
            for k2, c2 in a.items():
                for k, v in wreath.mul_keys(self.alg, akey, k2):
                    add_into(out, (keys, k), c * c2 * v)
        return out

    def right_act_top(self, elem: Element, a: WreathElement) -> Element:
        """Right multiplication inside the last factor.

        For a word ending in P the last factor is A_{n+1} and ``a`` may lie
        there; otherwise this is the ordinary right action.
        """
        if not self.word or self.word[-1] == "Q":
            return self.right_act(elem, a)
        if a.n != self.n + 1:
            raise RankMismatch(f"A_{a.n} is not the top algebra of {self!r}")
        last = len(self.word) - 1
        out: Element = {}
        for (keys, akey), c in elem.items():
            top = self.factor(last, keys[last]) * WreathElement(self.alg, self.n, {akey: Fraction(1)}).embed() * a
            for key, coeff in top.items():
                sign, lkey, rest = wreath.right_decompose(self.alg, key)
                add_into(out, (keys[:last] + (lkey,), rest), c * coeff * sign)
        return out


@lru_cache(maxsize=None)
def _right_generator(alg: FrobeniusAlgebra, b: int, i: int, r: int) -> WreathElement:
    return wreath.right_generator(alg, b, i, r)
