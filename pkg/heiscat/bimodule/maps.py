"""
Bimodule maps between word bimodules
====================================
Maps are right A_n-linear and super-commute with the left action:

    f(m a) = f(m) a,        f(a m) = (-1)^{|a| |f|} a f(m)

so a map is stored as the images of the right generators ``keys (x) 1_n``.
Equality is equality of those images in the normal-form basis.

Usage
-----
    from heiscat.bimodule.maps import Whiskered, compose, tensor_maps, whisker

    f_then_g = compose(g, f)                 # g o f
    padded = whisker("P", f, "Q", n)         # id_P (x) f (x) id_Q
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from heiscat.algebra import wreath
from heiscat.algebra.frobenius import add_into
from heiscat.algebra.wreath import WreathElement
from heiscat.bimodule.words import Element, Keys, WordBimodule
from heiscat.errors import NotHomogeneous, NotIntertwining, ShapeMismatch

log = logging.getLogger(__name__)

Degree = Tuple[int, int]


@dataclass
class BimoduleMap:
    source: WordBimodule
    target: WordBimodule
    degree: Degree
    images: Dict[Keys, Element] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.images = {k: {t: c for t, c in v.items() if c} for k, v in self.images.items()}

    def __repr__(self) -> str:
        return f"BimoduleMap({self.source!r} -> {self.target!r}, degree={self.degree})"

    @property
    def parity(self) -> int:
        return self.degree[1] % 2

    # -- application --------------------------------------------------------
    def image(self, keys: Keys) -> Element:
        return self.images.get(keys, {})

    def apply(self, elem: Element) -> Element:
        out: Element = {}
        alg = self.source.alg
        for (keys, akey), c in elem.items():
            for (tkeys, tkey), v in self.image(keys).items():
                for k, w in wreath.mul_keys(alg, tkey, akey):
                    add_into(out, (tkeys, k), c * v * w)
        return out

    # -- linear structure ---------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.images.values())

    def scale(self, c) -> "BimoduleMap":
        c = Fraction(c)
        return BimoduleMap(self.source, self.target, self.degree,
                           {k: {t: c * v for t, v in img.items()} for k, img in self.images.items()})

    def __add__(self, other: "BimoduleMap") -> "BimoduleMap":
        _check_parallel(self, other)
        images = {k: dict(v) for k, v in self.images.items()}
        for k, img in other.images.items():
            bucket = images.setdefault(k, {})
            for t, v in img.items():
                add_into(bucket, t, v)
        return BimoduleMap(self.source, self.target, _common_degree(self, other), images)

    def __neg__(self) -> "BimoduleMap":
        return self.scale(-1)

    def __sub__(self, other: "BimoduleMap") -> "BimoduleMap":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BimoduleMap):
            return NotImplemented
        return self.first_difference(other) is None

    def first_difference(self, other: "BimoduleMap"):
        """None when equal, else (generator keys, basis term, lhs, rhs)."""
        _check_parallel(self, other)
        for keys in sorted(set(self.images) | set(other.images), key=repr):
            a, b = self.image(keys), other.image(keys)
            for term in sorted(set(a) | set(b), key=repr):
                if a.get(term, Fraction(0)) != b.get(term, Fraction(0)):
                    return keys, term, a.get(term, Fraction(0)), b.get(term, Fraction(0))
        return None

    # -- checks -------------------------------------------------------------
    def check_homogeneous(self) -> None:
        d, eps = self.degree
        for keys, img in self.images.items():
            src_deg = self.source.keys_degree(keys)
            src_par = self.source.keys_parity(keys)
            for tkeys, tkey in img:
                deg, par = self.target.term_grading(tkeys, tkey)
                if deg != src_deg + d or par != (src_par + eps) % 2:
                    raise NotHomogeneous(f"{self!r} is not homogeneous of degree {self.degree}")

    def check_left_intertwining(self, generators: Iterable[WreathElement]) -> None:
        """f(a g) == (-1)^{|a||f|} a f(g) on every right generator g."""
        for a in generators:
            sign = -1 if self.parity and a.parity() else 1
            for keys in self.source.generator_keys():
                g = self.source.generator(keys)
                lhs = self.apply(self.source.left_act(a, g))
                rhs = {k: sign * v for k, v in self.target.left_act(a, self.apply(g)).items()}
                if _clean(lhs) != _clean(rhs):
                    raise NotIntertwining(f"{self!r} does not commute with the left action")


def _clean(elem: Element) -> Element:
    return {k: v for k, v in elem.items() if v}


def _check_parallel(f: BimoduleMap, g: BimoduleMap) -> None:
    if not (f.source.same_as(g.source) and f.target.same_as(g.target)):
        raise ShapeMismatch(f"{f!r} and {g!r} do not share source and target")


def _common_degree(f: BimoduleMap, g: BimoduleMap) -> Degree:
    if f.is_zero():
        return g.degree
    if g.is_zero() or f.degree == g.degree:
        return f.degree
    raise ShapeMismatch(f"cannot add maps of degrees {f.degree} and {g.degree}")


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def identity(M: WordBimodule) -> BimoduleMap:
    return BimoduleMap(M, M, (0, 0), {k: M.generator(k) for k in M.generator_keys()})


def zero_map(M: WordBimodule, N: WordBimodule, degree: Degree = (0, 0)) -> BimoduleMap:
    return BimoduleMap(M, N, degree, {})


def compose(f: BimoduleMap, g: BimoduleMap) -> BimoduleMap:
    """f o g."""
    if not g.target.same_as(f.source):
        raise ShapeMismatch(f"cannot compose {f!r} after {g!r}")
    degree = (f.degree[0] + g.degree[0], (f.degree[1] + g.degree[1]) % 2)
    return BimoduleMap(g.source, f.target, degree, {k: f.apply(img) for k, img in g.images.items()})


class Whiskered:
    """id_prefix (x) f (x) id_suffix on F_n(prefix + src + suffix), computed lazily.

    Images of right generators are built on first use, so applying a slice to
    a sparse element only touches the generators it actually meets.  Moving f
    past the prefix generators costs (-1)^{|f| |prefix|}.
    """

    def __init__(self, prefix: str, f: BimoduleMap, suffix: str, n: int):
        alg = f.source.alg
        prefix, suffix = tuple(prefix), tuple(suffix)
        self.f = f
        self.source = WordBimodule(alg, prefix + f.source.word + suffix, n)
        self.target = WordBimodule(alg, prefix + f.target.word + suffix, n)
        self.degree = f.degree
        self._p = len(prefix)
        self._q_src = self._p + len(f.source.word)
        self._q_tgt = self._p + len(f.target.word)
        self._cache: Dict[Keys, Element] = {}
        self.is_zero = self.source.is_zero or self.target.is_zero
        if not self.is_zero:
            label = self.source.labels[self._q_src]
            if label != f.source.n:
                raise ShapeMismatch(f"{f!r} sits at label {f.source.n}, the slot has label {label}")

    def image(self, keys: Keys) -> Element:
        if self.is_zero:
            return {}
        if keys not in self._cache:
            self._cache[keys] = self._compute(keys)
        return self._cache[keys]

    def _compute(self, keys: Keys) -> Element:
        f, target = self.f, self.target
        p, q_src, q_tgt = self._p, self._q_src, self._q_tgt
        pre, block, post = keys[:p], keys[p:q_src], keys[q_src:]
        sign = -1 if f.parity and self.source.keys_parity(pre) else 1
        suffix_factors = target.factors_of(post, start=q_tgt)
        out: Element = {}
        for (bkeys, akey), c in f.image(block).items():
            carry = WreathElement(f.source.alg, f.source.n, {akey: Fraction(1)})
            for (skeys, fin), c2 in target.normalize(suffix_factors, start=q_tgt, carry=carry).items():
                add_into(out, (pre + bkeys + skeys, fin), sign * c * c2)
        return out

    def apply(self, elem: Element) -> Element:
        out: Element = {}
        alg = self.source.alg
        for (keys, akey), c in elem.items():
            for (tkeys, tkey), v in self.image(keys).items():
                for k, w in wreath.mul_keys(alg, tkey, akey):
                    add_into(out, (tkeys, k), c * v * w)
        return {k: v for k, v in out.items() if v}

    def materialize(self) -> BimoduleMap:
        if self.is_zero:
            return zero_map(self.source, self.target, self.degree)
        images = {keys: self.image(keys) for keys in self.source.generator_keys()}
        return BimoduleMap(self.source, self.target, self.degree, images)


def whisker(prefix: str, f: BimoduleMap, suffix: str, n: int) -> BimoduleMap:
    """id_prefix (x) f (x) id_suffix as a full map."""
    return Whiskered(prefix, f, suffix, n).materialize()


def tensor_maps(f: BimoduleMap, g: BimoduleMap) -> BimoduleMap:
    """f (x) g = (f (x) id) o (id (x) g)."""
    if f.source.n != g.source.left_rank or f.target.n != g.target.left_rank:
        raise ShapeMismatch(f"{f!r} does not sit to the left of {g!r}")
    n = g.source.n
    right = whisker(f.source.word, g, "", n)
    left = whisker("", f, g.target.word, n)
    return compose(left, right)


def mult_operator(side: str, a: WreathElement, M: WordBimodule) -> BimoduleMap:
    """The left multiplication m -> a m, or the right one m -> (-1)^{|a||m|} m a.

    For ``side == "right"`` the element acts inside the last factor of M and
    must super-commute with A_n.
    """
    eps = a.parity() if a else 0
    degree = (a.grading()[0], eps)
    if side == "left":
        images = {k: M.left_act(a, M.generator(k)) for k in M.generator_keys()}
        return BimoduleMap(M, M, degree, images)
    if side != "right":
        raise ValueError("side must be 'left' or 'right'")
    _check_supercentral(a, M.n)
    images = {}
    for keys in M.generator_keys():
        sign = -1 if eps and M.keys_parity(keys) else 1
        images[keys] = {k: sign * v for k, v in M.right_act_top(M.generator(keys), a).items()}
    return BimoduleMap(M, M, degree, images)


def _check_supercentral(a: WreathElement, n: int) -> None:
    if a.n == n or not a:
        return
    alg = a.alg
    for x in algebra_generators(alg, n):
        y = x.embed(a.n - n)
        sign = -1 if a.parity() and x.parity() else 1
        if y * a != (a * y).scale(sign):
            raise NotIntertwining(f"element of A_{a.n} does not super-commute with A_{n}")


def algebra_generators(alg, n: int) -> List[WreathElement]:
    """Simple transpositions and single-slot dots: generators of A_n."""
    if n == 0:
        return [wreath.one(alg, 0)]
    gens = [wreath.from_perm(alg, wreath.simple(i, n)) for i in range(1, n)]
    for b in range(alg.dim):
        gens.append(wreath.dot(alg, {b: Fraction(1)}, 1, n))
    return gens
