"""
Derived morphisms
=================
Diagrams built from the generators: curls, bubbles, the diagram of an element
of A_k on k parallel strands, the maps alpha/beta that split Q^n P^m, and the
two sides of the multi-strand up-down relation.

Every builder returns plain diagrams (or combinations of them); nothing here
evaluates.  Step lists use the ``(pos, kind[, label])`` tuples of
``ir.build`` and are read bottom to top.

Usage
-----
    from heiscat.algebra.frobenius import builtin
    from heiscat.diagram import library

    B = builtin("dual_numbers")
    curl = library.right_curl(2)                       # J^2 on one strand
    c = library.bubble({1: 1}, 0, library.CLOCKWISE)   # c_{x,0}
    alpha, beta = library.alpha_beta(B, B.unit, B.unit, 1, 1, 1, [{0: 1}])
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple, Union

from heiscat.algebra import wreath
from heiscat.algebra.frobenius import FrobeniusAlgebra, Vector
from heiscat.algebra.wreath import COLUMN, ROW, WreathElement
from heiscat.diagram import ir
from heiscat.diagram.ir import Combination, Diagram, Step
from heiscat.errors import IndexOutOfRange, ShapeMismatch

log = logging.getLogger(__name__)

CLOCKWISE, COUNTERCLOCKWISE = "clockwise", "counterclockwise"


# ---------------------------------------------------------------------------
# Curls
# ---------------------------------------------------------------------------

def right_curl_steps(pos: int) -> List[Step]:
    return [(pos + 1, "cup_left"), (pos, "cross_pp"), (pos + 1, "cap_right")]


def left_curl_steps(pos: int) -> List[Step]:
    return [(pos, "cup_right"), (pos + 1, "cross_pp"), (pos, "cap_left")]


def down_curl_steps(pos: int) -> List[Step]:
    """A right curl carried round to a downward strand."""
    return [(pos, "cup_right")] + right_curl_steps(pos + 1) + [(pos + 1, "cap_right")]


def curl_steps(letter: str, pos: int, d: int) -> List[Step]:
    """d curls on the strand at ``pos``: right curls on P, down curls on Q."""
    one = right_curl_steps if letter == "P" else down_curl_steps
    return [s for _ in range(d) for s in one(pos)]


def right_curl(d: int = 1) -> Diagram:
    """d right curls on one upward strand; F_n gives right multiplication by J_n^d."""
    return ir.build("P", curl_steps("P", 1, d))


def left_curl() -> Diagram:
    return ir.build("P", left_curl_steps(1))


def down_curl(d: int = 1) -> Diagram:
    return ir.build("Q", curl_steps("Q", 1, d))


def curls_on(word: str, pos: int, d: int) -> Diagram:
    """d curls on strand ``pos`` of ``word``, identity elsewhere."""
    letters = ir.ObjectWord.parse(word).letters
    return ir.build(word, curl_steps(letters[pos - 1], pos, d))


CURL = "curl"


def strand_word(alg: FrobeniusAlgebra, factors: Sequence[Union[Vector, str]], coefficient=1) -> Diagram:
    """Dots and curls (``CURL``) on one upward strand, bottom to top.

    The Koszul sign of the stack is folded into the coefficient, so F_n
    sends the diagram to right multiplication by the product of the factors
    in the order given.
    """
    steps: List[Step] = []
    odd: List[int] = []
    for x in factors:
        if isinstance(x, str):
            steps.extend(right_curl_steps(1))
            odd.append(alg.sigma)
            continue
        steps.append((1, "dot_up", x))
        odd.append(alg.parity(x) if any(x.values()) else 0)
    pairs = sum(odd[a] * odd[b] for a in range(len(odd)) for b in range(a + 1, len(odd)))
    return build_dotted("P", steps, -coefficient if pairs % 2 else coefficient)


# ---------------------------------------------------------------------------
# Bubbles
# ---------------------------------------------------------------------------

def bubble_steps(b: Vector, d: int, orientation: str) -> List[Step]:
    if orientation == CLOCKWISE:
        return [(1, "cup_left")] + curl_steps("Q", 2, d) + [(1, "dot_up", b), (1, "cap_right")]
    if orientation == COUNTERCLOCKWISE:
        return [(1, "cup_right")] + curl_steps("P", 2, d) + [(1, "dot_down", b), (1, "cap_left")]
    raise ValueError(f"orientation must be {CLOCKWISE!r} or {COUNTERCLOCKWISE!r}")


def bubble(b: Vector, d: int, orientation: str = CLOCKWISE) -> Diagram:
    """c_{b,d} (clockwise) or c~_{b,d} (counterclockwise), an endomorphism of 1.

    A zero label gives the zero diagram.
    """
    if not any(b.values()):
        return ir.build("", bubble_steps({0: Fraction(1)}, d, orientation), coefficient=0)
    return ir.build("", bubble_steps(b, d, orientation))


# ---------------------------------------------------------------------------
# Elements of A_k as diagrams
# ---------------------------------------------------------------------------

def element_diagram(elem: WreathElement, letter: str) -> Diagram:
    """The diagram of a single-term element on k strands of ``letter``.

    On Q^k the key (b_1..b_k, tau) is the crossings of tau with the dots on
    top and evaluates to left multiplication.  On P^k the dots go first and
    the crossings are mirrored, which evaluates to right multiplication.
    """
    if len(elem) != 1:
        raise ShapeMismatch(f"element_diagram needs a single basis term, got {len(elem)}")
    ((tensor, perm), c), = elem.items()
    alg, k = elem.alg, elem.n
    word = letter * k
    steps: List[Step] = []
    crossings = wreath.reduced_word(perm)
    if letter == "Q":
        steps.extend((a, "cross_qq") for a in reversed(crossings))
        steps.extend(_dot(alg, j, "dot_down", tensor[j - 1]) for j in range(k, 0, -1))
    elif letter == "P":
        odd = [alg.parities[b] for b in tensor]
        pairs = sum(odd[i] * odd[j] for i in range(k) for j in range(i + 1, k))
        c = -c if pairs % 2 else c
        steps.extend(_dot(alg, k + 1 - j, "dot_up", tensor[j - 1]) for j in range(1, k + 1))
        steps.extend((k - a, "cross_pp") for a in crossings)
    else:
        raise ShapeMismatch(f"letter must be 'P' or 'Q', got {letter!r}")
    return ir.build(word, [s for s in steps if s is not None], coefficient=c)


def element_combination(elem: WreathElement, letter: str) -> Combination:
    return [(Fraction(1), element_diagram(wreath.from_key(elem.alg, t, p, c), letter)) for (t, p), c in elem.items()]


def _dot(alg: FrobeniusAlgebra, pos: int, kind: str, b: int) -> Optional[Step]:
    if b == alg.unit_index:
        return None
    return pos, kind, {b: Fraction(1)}


# ---------------------------------------------------------------------------
# Boxes and bundles of crossings
# ---------------------------------------------------------------------------

def _symmetrizer(alg: FrobeniusAlgebra, f: Vector, size: int, shape: str) -> WreathElement:
    return wreath.symmetrizer_idempotent(alg, f, shape, size)


def box_steps(alg: FrobeniusAlgebra, word: Sequence[str], boxes: Sequence[Tuple[Vector, int]]) -> List[Step]:
    """One box per maximal run of equal letters, with (idempotent, run length)."""
    steps: List[Step] = []
    pos = 1
    for f, size in boxes:
        if size:
            kind = "box_up" if word[pos - 1] == "P" else "box_down"
            steps.append((pos, kind, _symmetrizer(alg, f, size, ROW)))
        pos += size
    return steps


def qp_bundle(a: int, c: int) -> List[Step]:
    """Q^a P^c -> P^c Q^a, one P strand at a time."""
    return [(pos, "cross_qp") for r in range(c) for pos in range(a + r, r, -1)]


def pq_bundle(c: int, a: int) -> List[Step]:
    """P^c Q^a -> Q^a P^c, one Q strand at a time."""
    return [(pos, "cross_pq") for r in range(a) for pos in range(c + r, r, -1)]


def boxed_identity(alg: FrobeniusAlgebra, first: Tuple[str, Vector, int], second: Tuple[str, Vector, int],
                   shape: str = ROW) -> Diagram:
    """e (x) e' on letter^size (x) letter'^size'."""
    (x, f, a), (y, g, c) = first, second
    word = x * a + y * c
    D = ir.build(word, box_steps(alg, word, [(f, a), (g, c)]))
    return ir.omega(D) if shape == COLUMN else D


# ---------------------------------------------------------------------------
# alpha / beta
# ---------------------------------------------------------------------------

def alpha_beta(alg: FrobeniusAlgebra, f: Vector, g: Vector, m: int, n: int, k: int,
               bb: Sequence[Vector], shape: str = ROW) -> Tuple[Diagram, Diagram]:
    """(alpha_b, beta_{b^v}) between Q_f^n P_g^m and P_g^{m-k} Q_f^{n-k}.

    alpha caps off k strand pairs carrying the dots ``bb``; beta opens them
    again carrying the duals.  Column shapes are the image under omega.
    """
    if not 0 <= k <= min(m, n):
        raise IndexOutOfRange(f"k={k} outside 0..min(m, n)={min(m, n)}")
    if len(bb) != k:
        raise IndexOutOfRange(f"expected {k} dot labels, got {len(bb)}")
    wreath.check_idempotent(alg, f)
    wreath.check_idempotent(alg, g)
    duals = [alg.dual(b) for b in bb]
    alpha = _alpha(alg, f, g, m, n, bb)
    beta = _beta(alg, f, g, m, n, duals)
    if shape == COLUMN:
        return ir.omega(alpha), ir.omega(beta)
    return alpha, beta


def nested_cap_sign(alg: FrobeniusAlgebra, parities: Sequence[int]) -> int:
    """Sign from closing nested caps whose labels have ``parities``, outermost first.

    The label of the q-th of ell caps picks up (ell - q) factors of sigma.
    """
    ell = len(parities)
    total = sum((ell - q) * p for q, p in enumerate(parities, 1))
    return -1 if alg.sigma * total % 2 else 1


def _alpha(alg, f, g, m, n, bb) -> Diagram:
    k = len(bb)
    a, c = n - k, m - k
    word = "Q" * n + "P" * m
    steps = box_steps(alg, word, [(f, n), (g, m)])
    steps += [(n - k + j, "dot_down", bb[j - 1]) for j in range(k, 0, -1)]
    steps += [(n - i, "cap_left") for i in range(k)]
    steps += qp_bundle(a, c)
    steps += box_steps(alg, "P" * c + "Q" * a, [(g, c), (f, a)])
    sign = nested_cap_sign(alg, [alg.parity(b) if any(b.values()) else 0 for b in bb])
    return build_dotted(word, steps, sign)


def _beta(alg, f, g, m, n, cc) -> Diagram:
    k = len(cc)
    a, c = n - k, m - k
    word = "P" * c + "Q" * a
    steps = box_steps(alg, word, [(g, c), (f, a)])
    steps += pq_bundle(c, a)
    steps += [(a + j, "cup_right") for j in range(1, k + 1)]
    steps += [(n + k + 1 - j, "dot_up", cc[j - 1]) for j in range(1, k + 1)]
    steps += box_steps(alg, "Q" * n + "P" * m, [(f, n), (g, m)])
    return build_dotted(word, steps)


def _dead_dot(step: Step) -> bool:
    return len(step) == 3 and step[1] in ("dot_up", "dot_down") and not any(step[2].values())


def build_dotted(word: str, steps: List[Step], coefficient=1) -> Diagram:
    """Build; a vanishing dot label makes the whole diagram zero."""
    if any(_dead_dot(s) for s in steps):
        steps = [(s[0], s[1], {0: Fraction(1)}) if _dead_dot(s) else s for s in steps]
        return ir.build(word, steps, coefficient=0)
    return ir.build(word, steps, coefficient)


def slice_basis(alg: FrobeniusAlgebra, f: Vector, g: Vector) -> List[int]:
    """Basis indices b whose dual b^v lies in f B g; they must span it."""
    out = []
    for b in range(alg.dim):
        dual = alg.dual_basis[b]
        if dual and alg.mul(alg.mul(f, dual), g) == dual:
            out.append(b)
    expected = alg.idempotent_slice(f, g).dim()
    if len(out) != expected:
        raise ShapeMismatch(f"basis of {alg.name} is not adapted to the idempotents: "
                            f"{len(out)} duals in f B g, expected {expected}")
    return out


def d_sets(alg: FrobeniusAlgebra, f: Vector, g: Vector, k: int) -> List[Tuple[int, ...]]:
    """Multisets of size k from the adapted basis; a repeated b needs b^v even."""
    out = []
    for combo in itertools.combinations_with_replacement(slice_basis(alg, f, g), k):
        counts = Counter(combo)
        if any(mult > 1 and alg.parity(alg.dual_basis[b]) for b, mult in counts.items()):
            continue
        out.append(combo)
    return out


def stabilizer_order(bb: Sequence[int]) -> int:
    order = 1
    for mult in Counter(bb).values():
        order *= factorial(mult)
    return order


def iso_coefficient(m: int, n: int, k: int, bb: Sequence[int]) -> Fraction:
    """m! n! / (|S_b| (m-k)! (n-k)!)."""
    return Fraction(factorial(m) * factorial(n), stabilizer_order(bb) * factorial(m - k) * factorial(n - k))


def beta_alpha_sum(alg: FrobeniusAlgebra, f: Vector, g: Vector, m: int, n: int,
                   shape: str = ROW) -> Tuple[Combination, Combination]:
    """(sum over k and D^k of the weighted beta o alpha, the boxed identity on Q^n P^m)."""
    lhs: Combination = []
    for k in range(min(m, n) + 1):
        for bb in d_sets(alg, f, g, k):
            alpha, beta = alpha_beta(alg, f, g, m, n, k, [{b: Fraction(1)} for b in bb], shape)
            lhs.append((iso_coefficient(m, n, k, bb), ir.compose(beta, alpha)))
    rhs = ir.combination(boxed_identity(alg, ("Q", f, n), ("P", g, m), shape))
    return lhs, rhs


def alpha_beta_cases(alg: FrobeniusAlgebra, f: Vector, g: Vector, m: int, n: int, shape: str = ROW):
    """Yield (k, b, c, lhs, rhs) with lhs = coeff alpha_c o beta_{b^v} and rhs = delta_{bc} id."""
    for k in range(min(m, n) + 1):
        sets = d_sets(alg, f, g, k)
        for bb in sets:
            _, beta = alpha_beta(alg, f, g, m, n, k, [{b: Fraction(1)} for b in bb], shape)
            ident = boxed_identity(alg, ("P", g, m - k), ("Q", f, n - k), shape)
            for cc in sets:
                alpha, _ = alpha_beta(alg, f, g, m, n, k, [{c: Fraction(1)} for c in cc], shape)
                lhs = [(iso_coefficient(m, n, k, bb), ir.compose(alpha, beta))]
                rhs = ir.combination(ident) if cc == bb else [(Fraction(0), ident)]
                yield k, bb, cc, lhs, rhs


# ---------------------------------------------------------------------------
# Multi-strand up-down relation
# ---------------------------------------------------------------------------

def _boxes_both(alg, f, g, m, n) -> List[Step]:
    return box_steps(alg, "Q" * n + "P" * m, [(f, n), (g, m)])


def multistrand_lhs(alg: FrobeniusAlgebra, f: Vector, g: Vector, m: int, n: int) -> Combination:
    """Boxed double crossing of n downward strands with m upward ones."""
    boxes = _boxes_both(alg, f, g, m, n)
    steps = boxes + qp_bundle(n, m) + pq_bundle(m, n) + boxes
    return ir.combination(ir.build("Q" * n + "P" * m, steps))


def multistrand_rhs(alg: FrobeniusAlgebra, f: Vector, g: Vector, m: int, n: int) -> Combination:
    """sum over l and b in basis^l of (-1)^l m!n!/(l!(m-l)!(n-l)!) cap-cup terms."""
    word = "Q" * n + "P" * m
    boxes = _boxes_both(alg, f, g, m, n)
    out: Combination = []
    for ell in range(min(m, n) + 1):
        weight = Fraction((-1) ** ell * factorial(m) * factorial(n),
                          factorial(ell) * factorial(m - ell) * factorial(n - ell))
        for bb in itertools.product(range(alg.dim), repeat=ell):
            sign = nested_cap_sign(alg, [alg.parities[b] for b in bb])
            duals = [alg.dual_basis[b] for b in bb]
            steps = list(boxes)
            steps += [(n - ell + j, "dot_down", {bb[j - 1]: Fraction(1)}) for j in range(ell, 0, -1)]
            steps += [(n - i, "cap_left") for i in range(ell)]
            steps += [(n - ell + j, "cup_right") for j in range(1, ell + 1)]
            steps += [(n + ell + 1 - j, "dot_up", duals[j - 1]) for j in range(1, ell + 1)]
            steps += boxes
            D = build_dotted(word, steps)
            if not D.is_zero():
                out.append((weight * sign, D))
    return out
