"""
The evaluation functor F_n
==========================
``evaluate(D, alg, n)`` sends a diagram to the bimodule map between the word
bimodules of its source and target at right label n.  Slices are applied one
at a time to the images of the source generators, each slice being the local
generator map whiskered by identities on either side.

Usage
-----
    from heiscat.algebra.frobenius import builtin
    from heiscat.diagram import functor, library

    B = builtin("trivial")
    f = functor.evaluate(library.right_curl(1), B, 1)   # right mult by J_1
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Tuple

from heiscat.algebra import wreath
from heiscat.algebra.frobenius import FrobeniusAlgebra, add_into
from heiscat.algebra.wreath import Key, WreathElement
from heiscat.bimodule.local import generator_map
from heiscat.bimodule.maps import BimoduleMap, Whiskered, zero_map
from heiscat.bimodule.words import Element, Keys, WordBimodule, region_labels
from heiscat.diagram import ir
from heiscat.diagram.ir import BOX_KINDS, Combination, Diagram, Slice
from heiscat.diagram.library import element_diagram

log = logging.getLogger(__name__)


def _local_map(alg: FrobeniusAlgebra, gen: ir.Generator, r: int) -> BimoduleMap:
    if gen.kind in BOX_KINDS:
        return box_map(alg, gen.kind, gen.element, r)
    return generator_map(alg, gen.kind, r, gen.vector or None)


def slice_map(alg: FrobeniusAlgebra, word: Tuple[str, ...], sl: Slice, n: int) -> Whiskered:
    src, _ = sl.gen.shape
    start = sl.pos - 1
    label = region_labels(word, n)[start + len(src)]
    local = _local_map(alg, sl.gen, label)
    return Whiskered(word[:start], local, word[start + len(src):], n)


def evaluate(D: Diagram, alg: FrobeniusAlgebra, n: int) -> BimoduleMap:
    """F_n(D).  Any negative region label on the way gives the zero map."""
    source = WordBimodule(alg, D.source.letters, n)
    target = WordBimodule(alg, D.target.letters, n)
    deg = ir.degree(D, alg)
    if source.is_zero or target.is_zero or D.coefficient == 0:
        return zero_map(source, target, deg)
    current: Dict[Keys, Element] = {k: source.generator(k) for k in source.generator_keys()}
    word = D.source.letters
    for sl in D.slices:
        step = slice_map(alg, word, sl, n)
        word = step.target.word
        if step.is_zero:
            return zero_map(source, target, deg)
        current = {k: step.apply(v) for k, v in current.items()}
        if not any(current.values()):
            return zero_map(source, target, deg)
    c = D.coefficient
    return BimoduleMap(source, target, deg, {k: {t: c * v for t, v in img.items()} for k, img in current.items()})


def evaluate_sum(combo: Combination, alg: FrobeniusAlgebra, n: int) -> BimoduleMap:
    """sum_i c_i F_n(D_i); every term must share source and target."""
    src, tgt = ir.boundary(combo)
    source, target = WordBimodule(alg, src, n), WordBimodule(alg, tgt, n)
    images: Dict[Keys, Element] = {}
    deg = None
    for c, D in combo:
        if c == 0 or D.coefficient == 0:
            continue
        f = evaluate(D, alg, n)
        if f.is_zero():
            continue
        deg = deg or f.degree
        for keys, img in f.images.items():
            bucket = images.setdefault(keys, {})
            for t, v in img.items():
                add_into(bucket, t, c * v)
    if deg is None:
        deg = ir.degree(combo[0][1], alg) if combo else (0, 0)
    return BimoduleMap(source, target, deg, images)


# ---------------------------------------------------------------------------
# Boxes
# ---------------------------------------------------------------------------

def box_map(alg: FrobeniusAlgebra, kind: str, a: WreathElement, r: int) -> BimoduleMap:
    """F_l of a box, summed from the element diagrams of its basis keys."""
    letter = "P" if kind == "box_up" else "Q"
    M = WordBimodule(alg, letter * a.n, r)
    deg = a.grading() if a else (0, 0)
    if M.is_zero:
        return zero_map(M, M, deg)
    images: Dict[Keys, Element] = {}
    for key, c in a.items():
        f = _key_map(alg, letter, key, r)
        for keys, img in f.images.items():
            bucket = images.setdefault(keys, {})
            for t, v in img.items():
                add_into(bucket, t, c * v)
    return BimoduleMap(M, M, deg, images)


@lru_cache(maxsize=None)
def _key_map(alg: FrobeniusAlgebra, letter: str, key: Key, r: int) -> BimoduleMap:
    elem = WreathElement(alg, len(key[1]), {key: Fraction(1)})
    return evaluate(element_diagram(elem, letter), alg, r)


# ---------------------------------------------------------------------------
# Direct operators for cross-checks
# ---------------------------------------------------------------------------

def left_multiplication(alg: FrobeniusAlgebra, a: WreathElement, k: int, r: int) -> BimoduleMap:
    """On F_l(Q^k) = A_l: m -> shift_{r-k}(a) m."""
    M = WordBimodule(alg, "Q" * k, r)
    if M.is_zero:
        return zero_map(M, M, a.grading())
    keys0 = (None,) * k
    images = {keys0: {(keys0, key): c for key, c in a.shift(r - k).items()}}
    return BimoduleMap(M, M, a.grading(), images)


def right_multiplication(alg: FrobeniusAlgebra, a: WreathElement, k: int, r: int) -> BimoduleMap:
    """On F_l(P^k) = A_{r+k}: m -> (-1)^{|a||m|} m shift_l(a)."""
    return right_action(alg, a.shift(r), k, r)


def right_action(alg: FrobeniusAlgebra, top: WreathElement, k: int, r: int) -> BimoduleMap:
    """On F_l(P^k) = A_{r+k}: m -> (-1)^{|w||m|} m w for any homogeneous w in A_{r+k}."""
    M = WordBimodule(alg, "P" * k, r)
    deg = top.grading()
    if M.is_zero:
        return zero_map(M, M, deg)
    images: Dict[Keys, Element] = {}
    for keys in M.generator_keys():
        x = _flatten(M, keys)
        sign = -1 if deg[1] and M.keys_parity(keys) else 1
        images[keys] = M.normalize([x * top] + [wreath.one(alg, M.labels[j]) for j in range(1, k)])
        images[keys] = {t: sign * v for t, v in images[keys].items()}
    return BimoduleMap(M, M, deg, images)


def _flatten(M: WordBimodule, keys: Keys) -> WreathElement:
    """The product of the P factors of ``keys``, as an element of A_{r+k}."""
    alg = M.alg
    out = wreath.one(alg, M.labels[0])
    for j, key in enumerate(keys):
        factor = M.factor(j, key)
        out = out * factor.embed(M.labels[0] - factor.n) if factor.n < M.labels[0] else out * factor
    return out


def maps_equal(f: BimoduleMap, g: BimoduleMap) -> bool:
    return f.first_difference(g) is None


def evaluate_all(D: Diagram, alg: FrobeniusAlgebra, labels: Iterable[int]) -> Dict[int, BimoduleMap]:
    return {n: evaluate(D, alg, n) for n in labels}
