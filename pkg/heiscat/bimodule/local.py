"""
Images of the generating morphisms
==================================
``generator_map(alg, kind, r, b)`` is the bimodule map a generator induces on
its own source word at right label ``r``.  Every formula is written on the
letter factors of a right generator and pushed back into normal form.

    dot_up(b)     P -> P     x -> (-1)^{|b||x|} x (1^r (x) b)
    dot_down(b)   Q -> Q     x -> (1^{r-1} (x) b) x
    cross_pp      PP -> PP   right multiplication by s_{r+1}
    cross_qq      QQ -> QQ   left multiplication by s_{r-1}
    cross_pq      PQ -> QP   a (x) a' -> a s_l a'
    cross_qp      QP -> PQ   (1^r (x) b) s_l -> 1^r (x) (1^{r-1} (x) b), else 0
    cup_right     1 -> QP    inclusion A_l -> A_{r+1}
    cap_right     PQ -> 1    multiplication
    cup_left      1 -> PQ    Casimir of the extension A_{r-1} in A_l
    cap_left      QP -> 1    extension trace A_{r+1} -> A_l
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from heiscat.algebra import wreath
from heiscat.algebra.frobenius import FrobeniusAlgebra, Vector, add_into
from heiscat.algebra.wreath import WreathElement
from heiscat.bimodule.maps import BimoduleMap
from heiscat.bimodule.words import Element, WordBimodule

# kind -> (source word, target word)
SHAPES: Dict[str, Tuple[str, str]] = {
    "dot_up": ("P", "P"),
    "dot_down": ("Q", "Q"),
    "cross_pp": ("PP", "PP"),
    "cross_qq": ("QQ", "QQ"),
    "cross_pq": ("PQ", "QP"),
    "cross_qp": ("QP", "PQ"),
    "cup_right": ("", "QP"),
    "cap_right": ("PQ", ""),
    "cup_left": ("", "PQ"),
    "cap_left": ("QP", ""),
}

DOT_KINDS = ("dot_up", "dot_down")

ADJUNCTIONS = {"eps_R": "cap_right", "eta_R": "cup_right", "eps_L": "cap_left", "eta_L": "cup_left"}

# (coefficient, carry into the leftmost region, letter factors)
_Term = Tuple[Fraction, Optional[WreathElement], List[WreathElement]]


def generator_degree(alg: FrobeniusAlgebra, kind: str, label: Optional[Vector] = None) -> Tuple[int, int]:
    if kind in DOT_KINDS:
        return alg.grading(label) if label else (0, 0)
    if kind == "cup_left":
        return alg.delta, alg.sigma
    if kind == "cap_left":
        return -alg.delta, alg.sigma
    return 0, 0


def generator_map(alg: FrobeniusAlgebra, kind: str, r: int, label: Optional[Vector] = None) -> BimoduleMap:
    """F_l of a single generator, between the words of ``SHAPES[kind]``."""
    items = tuple(sorted(label.items())) if label else ()
    return _generator_map(alg, kind, r, items)


def adjunction_map(alg: FrobeniusAlgebra, kind: str, n: int) -> BimoduleMap:
    """eps_R, eta_R, eps_L or eta_L at right label n."""
    return generator_map(alg, ADJUNCTIONS[kind], n)


@lru_cache(maxsize=None)
def _generator_map(alg: FrobeniusAlgebra, kind: str, r: int, items) -> BimoduleMap:
    src, tgt = SHAPES[kind]
    label = dict(items)
    source = WordBimodule(alg, src, r)
    target = WordBimodule(alg, tgt, r)
    degree = generator_degree(alg, kind, label)
    images: Dict = {}
    if not (source.is_zero or target.is_zero):
        rule = _RULES[kind]
        for keys in source.generator_keys():
            out: Element = {}
            for coeff, carry, factors in rule(alg, r, source.factors_of(keys), label):
                for k, v in target.normalize(factors, carry=carry).items():
                    add_into(out, k, coeff * v)
            images[keys] = out
    return BimoduleMap(source, target, degree, images)


# ---------------------------------------------------------------------------
# Rules
# ---------------------------------------------------------------------------

def _dot_up(alg, r, factors, b) -> List[_Term]:
    x, = factors
    sign = -1 if alg.parity(b) and x.parity() else 1
    return [(Fraction(sign), None, [x * wreath.dot(alg, b, r + 1, r + 1)])]


def _dot_down(alg, r, factors, b) -> List[_Term]:
    x, = factors
    return [(Fraction(1), None, [wreath.dot(alg, b, r, r) * x])]


def _cross_pp(alg, r, factors, _) -> List[_Term]:
    x1, x2 = factors
    y = x1 * x2.embed() * wreath.from_perm(alg, wreath.simple(r + 1, r + 2))
    return [(Fraction(1), None, [y, wreath.one(alg, r + 1)])]


def _cross_qq(alg, r, factors, _) -> List[_Term]:
    x1, x2 = factors
    y = wreath.from_perm(alg, wreath.simple(r - 1, r)) * x1.embed() * x2
    return [(Fraction(1), None, [wreath.one(alg, r - 1), y])]


def _cross_pq(alg, r, factors, _) -> List[_Term]:
    xp, xq = factors
    y = xp.embed() * wreath.from_perm(alg, wreath.simple(r, r + 1)) * xq.embed()
    return [(Fraction(1), None, [y, wreath.one(alg, r + 1)])]


def _cross_qp(alg, r, factors, _) -> List[_Term]:
    xq, xp = factors
    out: List[_Term] = []
    for (t, p), c in (xq * xp).items():
        if p[r] == r + 1:
            continue
        j = wreath.inverse(p)[r]
        tau2 = wreath.chain(range(r - 1, j - 1, -1), r)
        tau1 = wreath.compose(wreath.compose(p, wreath.inverse(wreath.extend(tau2, r + 1))),
                              wreath.simple(r, r + 1))
        left = wreath.from_key(alg, t[:r], tau1[:r])
        right = wreath.dot(alg, {t[r]: Fraction(1)}, r, r) * wreath.from_perm(alg, tau2)
        out.append((c, None, [left, right]))
    return out


def _cup_right(alg, r, factors, _) -> List[_Term]:
    return [(Fraction(1), None, [wreath.one(alg, r + 1), wreath.one(alg, r + 1)])]


def _cap_right(alg, r, factors, _) -> List[_Term]:
    xp, xq = factors
    return [(Fraction(1), xp * xq, [])]


def _cup_left(alg, r, factors, _) -> List[_Term]:
    out: List[_Term] = []
    for b in range(alg.dim):
        sign = -1 if alg.sigma and (alg.parities[b] + alg.sigma) % 2 else 1
        for i in range(1, r + 1):
            up = wreath.from_perm(alg, wreath.chain(range(i, r), r))
            down = wreath.from_perm(alg, wreath.chain(range(r - 1, i - 1, -1), r))
            p_factor = up * wreath.dot(alg, alg.dual_basis[b], r, r)
            q_factor = wreath.dot(alg, {b: Fraction(1)}, r, r) * down
            out.append((Fraction(sign), None, [p_factor, q_factor]))
    return out


def _cap_left(alg, r, factors, _) -> List[_Term]:
    xq, xp = factors
    return [(Fraction(1), wreath.extension_trace(xq * xp), [])]


_RULES = {
    "dot_up": _dot_up,
    "dot_down": _dot_down,
    "cross_pp": _cross_pp,
    "cross_qq": _cross_qq,
    "cross_pq": _cross_pq,
    "cross_qp": _cross_qp,
    "cup_right": _cup_right,
    "cap_right": _cap_right,
    "cup_left": _cup_left,
    "cap_left": _cap_left,
}


def local_images(alg: FrobeniusAlgebra, kind: str, r: int, label: Optional[Vector] = None) -> Sequence:
    """Generator keys of the source word with their images, sorted."""
    f = generator_map(alg, kind, r, label)
    return sorted(f.images.items(), key=repr)
