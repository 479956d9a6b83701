"""
Relation catalog
================
Every relation the harness can check, as a builder that enumerates concrete
cases (one per choice of dot labels, orientation, curl count, ...) for a given
algebra.  A case is a pair of linear combinations of diagrams that must have
equal images under every F_n.

Relations are grouped by suite:

    local_relations   the defining relations of the category
    curls_bubbles     identities derived from them (curls, bubbles, braids)
    isomorphisms      the multi-strand relation and the alpha/beta splitting
    degree_vanishing  negative-degree endomorphisms of short words are zero

Usage
-----
    from heiscat.algebra.frobenius import builtin
    from heiscat.diagram.relations import CATALOG, Options

    B = builtin("trivial")
    for case in CATALOG["double-crossing-up"].cases(B, Options()):
        print(case.key, len(case.lhs), len(case.rhs))
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from heiscat.algebra.frobenius import BUILTIN_IDEMPOTENTS, FrobeniusAlgebra, Vector
from heiscat.algebra.wreath import COLUMN, ROW
from heiscat.diagram import ir, library
from heiscat.diagram.ir import Combination, Step
from heiscat.diagram.library import CLOCKWISE, COUNTERCLOCKWISE, CURL, build_dotted, curl_steps, strand_word

LOCAL, DERIVED, ISOMORPHISMS = "local_relations", "curls_bubbles", "isomorphisms"
DEGREE = "degree_vanishing"

Params = Tuple[Tuple[str, object], ...]


@dataclass(frozen=True)
class Options:
    """Knobs shared by the builders; the defaults are what the suites run."""

    idempotents: Tuple[Tuple[str, Tuple[Tuple[int, Fraction], ...]], ...] = ()
    sizes: Tuple[Tuple[int, int], ...] = ((1, 1), (1, 2), (2, 1), (2, 2))
    max_curls: int = 2
    max_slide_curls: int = 2
    max_slices: int = 3
    shapes: Tuple[str, ...] = (ROW, COLUMN)

    def idempotent_family(self, alg: FrobeniusAlgebra) -> List[Tuple[str, Vector]]:
        if self.idempotents:
            return [(name, dict(items)) for name, items in self.idempotents]
        return default_idempotents(alg)


@dataclass(eq=False)
class Case:
    relation: str
    params: Params
    lhs: Combination
    rhs: Combination
    skip: Optional[str] = None
    ref: str = ""

    @property
    def key(self) -> Tuple[str, str]:
        return self.relation, ",".join(f"{k}={v}" for k, v in self.params)


@dataclass(frozen=True)
class Relation:
    id: str
    suite: str
    ref: str
    summary: str
    builder: Callable[[FrobeniusAlgebra, Options], Iterator[Case]] = field(repr=False)

    def cases(self, alg: FrobeniusAlgebra, opts: Optional[Options] = None) -> List[Case]:
        cases = list(self.builder(alg, opts or Options()))
        for case in cases:
            case.ref = self.ref
        return cases


CATALOG: Dict[str, Relation] = {}


def relation(rid: str, suite: str, ref: str, summary: str):
    """Register a case builder under ``rid``; ``ref`` is its key in ``heiscat.references.INDEX``."""
    def register(fn):
        CATALOG[rid] = Relation(rid, suite, ref, summary, fn)
        return fn
    return register


def in_suite(suite: str) -> List[Relation]:
    return [r for r in CATALOG.values() if r.suite == suite]


def default_idempotents(alg: FrobeniusAlgebra) -> List[Tuple[str, Vector]]:
    """The unit, plus the primitive idempotents some builtins name."""
    family = [("1", dict(alg.unit))]
    for label in BUILTIN_IDEMPOTENTS.get(alg.name, []):
        family.append((label, alg.basis_vector(alg.index_of(label))))
    return family


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def _v(i: int) -> Vector:
    return {i: Fraction(1)}


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _one(word: str, steps: Sequence[Step], c=1) -> Combination:
    return [(Fraction(1), build_dotted(word, list(steps), c))]


def _identity(word: str, c=1) -> Combination:
    return [(Fraction(c), ir.identity(word))]


def _zero(word: str) -> Combination:
    return _identity(word, 0)


def _pairs(alg: FrobeniusAlgebra) -> Iterator[Tuple[int, int]]:
    return itertools.product(range(alg.dim), repeat=2)


def _dot_kind(letter: str) -> str:
    return "dot_up" if letter == "P" else "dot_down"


def _cross_kind(x: str, y: str) -> str:
    return f"cross_{x.lower()}{y.lower()}"


def _crossings(word: str, positions: Sequence[int]) -> List[Step]:
    """Crossings at ``positions`` (bottom first), kinds read off the word as it changes."""
    letters = list(word)
    steps: List[Step] = []
    for pos in positions:
        x, y = letters[pos - 1], letters[pos]
        steps.append((pos, _cross_kind(x, y)))
        letters[pos - 1], letters[pos] = y, x
    return steps


# ---------------------------------------------------------------------------
# Local relations
# ---------------------------------------------------------------------------

@relation("dot-collision-up", LOCAL, "eq:collision-up", "two dots on an upward strand multiply, with a Koszul sign")
def _collision_up(alg, opts):
    for i, j in _pairs(alg):
        lhs = _one("P", [(1, "dot_up", _v(j)), (1, "dot_up", _v(i))])
        rhs = _one("P", [(1, "dot_up", alg.mul(_v(j), _v(i)))], _sign(alg.parities[i] * alg.parities[j]))
        yield Case("dot-collision-up", (("lower", alg.labels[j]), ("upper", alg.labels[i])), lhs, rhs)


@relation("dot-collision-down", LOCAL, "eq:collision-down", "two dots on a downward strand multiply in reverse order")
def _collision_down(alg, opts):
    for i, j in _pairs(alg):
        lhs = _one("Q", [(1, "dot_down", _v(j)), (1, "dot_down", _v(i))])
        rhs = _one("Q", [(1, "dot_down", alg.mul(_v(i), _v(j)))])
        yield Case("dot-collision-down", (("lower", alg.labels[j]), ("upper", alg.labels[i])), lhs, rhs)


@relation("dot-slide-cup-left", LOCAL, "eq:dotsup-a", "a dot moves across a left cup, twisted by the Nakayama map")
def _dot_cup_left(alg, opts):
    for i in range(alg.dim):
        lhs = _one("", [(1, "cup_left"), (1, "dot_up", alg.nakayama(_v(i)))])
        rhs = _one("", [(1, "cup_left"), (2, "dot_down", _v(i))])
        yield Case("dot-slide-cup-left", (("b", alg.labels[i]),), lhs, rhs)


@relation("dot-slide-cap-right", LOCAL, "eq:dotsup-b", "a dot moves across a right cap")
def _dot_cap_right(alg, opts):
    for i in range(alg.dim):
        lhs = _one("PQ", [(1, "dot_up", _v(i)), (1, "cap_right")])
        rhs = _one("PQ", [(2, "dot_down", _v(i)), (1, "cap_right")])
        yield Case("dot-slide-cap-right", (("b", alg.labels[i]),), lhs, rhs)


@relation("dot-slide-cup-right", LOCAL, "eq:dotsdown-a", "a dot moves across a right cup")
def _dot_cup_right(alg, opts):
    for i in range(alg.dim):
        lhs = _one("", [(1, "cup_right"), (1, "dot_down", _v(i))])
        rhs = _one("", [(1, "cup_right"), (2, "dot_up", _v(i))])
        yield Case("dot-slide-cup-right", (("b", alg.labels[i]),), lhs, rhs)


@relation("dot-slide-cap-left", LOCAL, "eq:dotsdown-b", "a dot moves across a left cap, twisted by the Nakayama map")
def _dot_cap_left(alg, opts):
    for i in range(alg.dim):
        lhs = _one("QP", [(1, "dot_down", _v(i)), (1, "cap_left")])
        rhs = _one("QP", [(2, "dot_up", alg.nakayama(_v(i))), (1, "cap_left")])
        yield Case("dot-slide-cap-left", (("b", alg.labels[i]),), lhs, rhs)


@relation("dot-supercommute", LOCAL, "eq:supercomm", "dots on distinct strands supercommute")
def _supercommute(alg, opts):
    for word in ("PP", "QQ", "PQ", "QP"):
        k1, k2 = _dot_kind(word[0]), _dot_kind(word[1])
        for i, j in _pairs(alg):
            lhs = _one(word, [(1, k1, _v(i)), (2, k2, _v(j))])
            rhs = _one(word, [(2, k2, _v(j)), (1, k1, _v(i))], _sign(alg.parities[i] * alg.parities[j]))
            params = (("word", word), ("left", alg.labels[i]), ("right", alg.labels[j]))
            yield Case("dot-supercommute", params, lhs, rhs)


@relation("dot-through-crossing", LOCAL, "eq:rel0a", "a dot slides through an upward crossing")
def _dot_through_crossing(alg, opts):
    for i in range(alg.dim):
        b = _v(i)
        yield Case("dot-through-crossing", (("b", alg.labels[i]), ("from", 1)),
                   _one("PP", [(1, "dot_up", b), (1, "cross_pp")]),
                   _one("PP", [(1, "cross_pp"), (2, "dot_up", b)]))
        yield Case("dot-through-crossing", (("b", alg.labels[i]), ("from", 2)),
                   _one("PP", [(2, "dot_up", b), (1, "cross_pp")]),
                   _one("PP", [(1, "cross_pp"), (1, "dot_up", b)]))


@relation("braid-up", LOCAL, "eq:rel1a", "upward crossings satisfy the braid relation")
def _braid_up(alg, opts):
    x = "cross_pp"
    yield Case("braid-up", (), _one("PPP", [(1, x), (2, x), (1, x)]), _one("PPP", [(2, x), (1, x), (2, x)]))


@relation("double-crossing-up", LOCAL, "eq:rel1b", "an upward double crossing is the identity")
def _double_crossing_up(alg, opts):
    yield Case("double-crossing-up", (), _one("PP", [(1, "cross_pp"), (1, "cross_pp")]), _identity("PP"))


@relation("double-crossing-qp", LOCAL, "eq:rel2a", "the QP double crossing is the identity minus the cap-cup sum")
def _double_crossing_qp(alg, opts):
    lhs = _one("QP", [(1, "cross_qp"), (1, "cross_pq")])
    rhs = _identity("QP")
    for i in range(alg.dim):
        steps = [(1, "dot_down", _v(i)), (1, "cap_left"), (1, "cup_right"), (2, "dot_up", alg.dual_basis[i])]
        rhs.append((Fraction(-1), build_dotted("QP", steps)))
    yield Case("double-crossing-qp", (), lhs, rhs)


@relation("double-crossing-pq", LOCAL, "eq:rel2b", "the PQ double crossing is the identity")
def _double_crossing_pq(alg, opts):
    yield Case("double-crossing-pq", (), _one("PQ", [(1, "cross_pq"), (1, "cross_qp")]), _identity("PQ"))


@relation("bubble-trace", LOCAL, "eq:rel3a", "a counterclockwise circle with a dot b is tr(b)")
def _bubble_trace(alg, opts):
    for i in range(alg.dim):
        lhs = _one("", [(1, "cup_right"), (1, "dot_down", _v(i)), (1, "cap_left")])
        yield Case("bubble-trace", (("b", alg.labels[i]),), lhs, _identity("", alg.trace_basis(i)))


@relation("left-curl-zero", LOCAL, "eq:rel3b", "a left curl vanishes")
def _left_curl_zero(alg, opts):
    yield Case("left-curl-zero", (), [(Fraction(1), library.left_curl())], _zero("P"))


@relation("snake", LOCAL, "eq:relsnake", "right cups and caps satisfy the zigzag identities")
def _snake(alg, opts):
    yield Case("snake", (("strand", "P"),), _one("P", [(2, "cup_right"), (1, "cap_right")]), _identity("P"))
    yield Case("snake", (("strand", "Q"),), _one("Q", [(1, "cup_right"), (2, "cap_right")]), _identity("Q"))


@relation("left-zigzag", LOCAL, "rel:left-down-zigzag", "left cups and caps satisfy the zigzag identities, with a sign on Q")
def _left_zigzag(alg, opts):
    yield Case("left-zigzag", (("strand", "P"),), _one("P", [(1, "cup_left"), (2, "cap_left")]), _identity("P"))
    yield Case("left-zigzag", (("strand", "Q"),),
               _one("Q", [(2, "cup_left"), (1, "cap_left")], _sign(alg.sigma)), _identity("Q"))


# ---------------------------------------------------------------------------
# Derived identities
# ---------------------------------------------------------------------------

@relation("triple-point", DERIVED, "eq:triple-point", "a strand slides past a crossing, every orientation")
def _triple_point(alg, opts):
    for letters in itertools.product("PQ", repeat=3):
        word = "".join(letters)
        yield Case("triple-point", (("word", word),),
                   _one(word, _crossings(word, (1, 2, 1))), _one(word, _crossings(word, (2, 1, 2))))


@relation("curl-nakayama", DERIVED, "eq:curl-Nakayama", "a dot passes through a curl, twisted by the Nakayama map")
def _curl_nakayama(alg, opts):
    for i in range(alg.dim):
        b, psi_b = _v(i), alg.nakayama(_v(i))
        sign = _sign(alg.sigma * alg.parities[i])
        curl_p, curl_q = library.right_curl_steps(1), library.down_curl_steps(1)
        yield Case("curl-nakayama", (("b", alg.labels[i]), ("strand", "P")),
                   _one("P", [(1, "dot_up", b)] + curl_p), _one("P", curl_p + [(1, "dot_up", psi_b)], sign))
        yield Case("curl-nakayama", (("b", alg.labels[i]), ("strand", "Q")),
                   _one("Q", curl_q + [(1, "dot_down", b)]), _one("Q", [(1, "dot_down", psi_b)] + curl_q, sign))


def _curl_slide(alg: FrobeniusAlgebra, d: int, side: str) -> Tuple[Combination, Combination]:
    """d curls slide through an upward crossing, leaving dotted correction terms."""
    cross = [(1, "cross_pp")]
    if side == "left":
        lhs = _one("PP", cross + curl_steps("P", 1, d))
        rhs = _one("PP", curl_steps("P", 2, d) + cross)
    else:
        lhs = _one("PP", curl_steps("P", 1, d) + cross)
        rhs = _one("PP", cross + curl_steps("P", 2, d))
    for k in range(d):
        for i in range(alg.dim):
            b, dual = _v(i), alg.dual_basis[i]
            eps = _sign(alg.sigma * (alg.parities[i] + alg.sigma))
            if side == "left":
                dots = [(2, "dot_up", b), (1, "dot_up", dual)]
                steps = curl_steps("P", 2, d - k - 1) + dots + curl_steps("P", 1, k)
            else:
                dots = [(1, "dot_up", b), (2, "dot_up", dual)]
                steps = curl_steps("P", 1, k) + dots + curl_steps("P", 2, d - k - 1)
            rhs.extend(_one("PP", steps, eps))
    return lhs, rhs


@relation("curl-slide-left", DERIVED, "eq:circle-mult-leftup-slide", "curls on the left strand slide up through a crossing")
def _curl_slide_left(alg, opts):
    for d in range(1, opts.max_curls + 1):
        lhs, rhs = _curl_slide(alg, d, "left")
        yield Case("curl-slide-left", (("d", d),), lhs, rhs)


@relation("curl-slide-right", DERIVED, "eq:circle-mult-rightup-slide", "curls on the left strand slide down through a crossing")
def _curl_slide_right(alg, opts):
    for d in range(1, opts.max_curls + 1):
        lhs, rhs = _curl_slide(alg, d, "right")
        yield Case("curl-slide-right", (("d", d),), lhs, rhs)


def _bubble(b: Vector, d: int, orientation: str) -> Combination:
    return [(Fraction(1), library.bubble(b, d, orientation))]


@relation("bubble-nakayama", DERIVED, "eq:circle-Nakayama", "c_{b,d} = (-1)^{d sigma} c_{psi(b),d}, either orientation")
def _bubble_nakayama(alg, opts):
    for orientation in (CLOCKWISE, COUNTERCLOCKWISE):
        for d in range(opts.max_curls + 1):
            for i in range(alg.dim):
                params = (("b", alg.labels[i]), ("d", d), ("orientation", orientation))
                rhs = [(Fraction(_sign(d * alg.sigma)), library.bubble(alg.nakayama(_v(i)), d, orientation))]
                yield Case("bubble-nakayama", params, _bubble(_v(i), d, orientation), rhs)


@relation("bubble-curl-parity", DERIVED, "lem:circle-index-relations",
          "bubbles with an odd number of odd curls vanish on labels fixed by psi")
def _bubble_curl_parity(alg, opts):
    fixed = [i for i in range(alg.dim) if alg.nakayama(_v(i)) == _v(i)]
    for orientation in (CLOCKWISE, COUNTERCLOCKWISE):
        for d in range(1, opts.max_curls + 1):
            if not d * alg.sigma % 2:
                continue
            for i in fixed:
                params = (("b", alg.labels[i]), ("d", d), ("orientation", orientation))
                yield Case("bubble-curl-parity", params, _bubble(_v(i), d, orientation), _zero(""))


def conversion_rhs(alg: FrobeniusAlgebra, i: int, d: int) -> Combination:
    """Counterclockwise c~_{b,d+1} as products of c~ and clockwise bubbles."""
    out: Combination = []
    pb, sigma = alg.parities[i], alg.sigma
    psi_b = alg.nakayama(_v(i))
    for k in range(d):
        for f in range(alg.dim):
            pf = alg.parities[f]
            label = alg.mul(_v(f), psi_b)
            if not label:
                continue
            sign = _sign(pf + pb * pf + (k + 1) * sigma * pf + (d + k * d + 1) * sigma)
            D = ir.juxtapose(library.bubble(label, k, COUNTERCLOCKWISE),
                             library.bubble(alg.dual_basis[f], d - k - 1, CLOCKWISE))
            out.append((Fraction(sign), D))
    return out or _zero("")


@relation("bubble-conversion", DERIVED, "prop:circle-conversion", "counterclockwise bubbles are products of clockwise ones")
def _bubble_conversion(alg, opts):
    for d in range(opts.max_curls):
        for i in range(alg.dim):
            yield Case("bubble-conversion", (("b", alg.labels[i]), ("d", d + 1)),
                       _bubble(_v(i), d + 1, COUNTERCLOCKWISE), conversion_rhs(alg, i, d))


def bubble_slide_rhs(alg: FrobeniusAlgebra, i: int, d: int) -> Combination:
    """An upward strand moved from the right of c_{b,d} to its left.

    Correction terms are strands carrying a word in dots and curls, some
    with a smaller clockwise bubble on their right.
    """
    sigma, pb = alg.sigma, alg.parities[i]
    b = _v(i)
    curls = [CURL] * d
    out: Combination = [(Fraction(1), ir.pad(library.bubble(b, d, CLOCKWISE), left=("P",)))]
    for f in range(alg.dim):
        pf = alg.parities[f]
        top = alg.mul(b, alg.nakayama_power(_v(f), -d))
        if top:
            sign = _sign(sigma * pf + sigma + pb * pf + pb * sigma + d * sigma)
            out.append((Fraction(1), strand_word(alg, [alg.dual_basis[f], top] + curls, sign)))
    for k in range(d):
        for c in range(alg.dim):
            pc = alg.parities[c]
            top = alg.mul(alg.nakayama_power(b, k - d), alg.nakayama_power(_v(c), -d))
            if top:
                sign = _sign(sigma * k * d + pb * pc + sigma * pb + sigma * pc + sigma)
                out.append((Fraction(1), strand_word(alg, [alg.dual_basis[c], top] + curls, sign)))
    for k in range(d):
        for p in range(d - 1 - k):
            for c, g in _pairs(alg):
                pc, pg = alg.parities[c], alg.parities[g]
                label = alg.mul(alg.mul(b, alg.nakayama_power(_v(c), -k)), alg.dual_basis[g])
                if not label:
                    continue
                exponent = sigma * (pg * (d + k + 1) + k * d + pc * (d + k + p) + (d + k) * (p + 1)) + pc + pg * pc
                strand = strand_word(alg, [alg.dual_basis[c]] + [CURL] * p + [_v(g)] + [CURL] * k, -_sign(exponent))
                circle = ir.pad(library.bubble(label, d - 2 - k - p, CLOCKWISE), left=("P",))
                out.append((Fraction(1), ir.compose(circle, strand)))
    return out


@relation("bubble-slide", DERIVED, "prop:bubble-slide", "an upward strand slides across a clockwise bubble")
def _bubble_slide(alg, opts):
    for d in range(opts.max_slide_curls + 1):
        for i in range(alg.dim):
            lhs = [(Fraction(1), ir.juxtapose(library.bubble(_v(i), d, CLOCKWISE), ir.identity("P")))]
            yield Case("bubble-slide", (("b", alg.labels[i]), ("d", d)), lhs, bubble_slide_rhs(alg, i, d))


# ---------------------------------------------------------------------------
# Isomorphisms
# ---------------------------------------------------------------------------

def _idempotent_pairs(alg, opts):
    family = opts.idempotent_family(alg)
    return [(fn, f, gn, g) for fn, f in family for gn, g in family]


@relation("up-down-multistrand", ISOMORPHISMS, "eq:multi-strand-up-down-rel", "n downward strands crossing m upward ones, boxed")
def _multistrand(alg, opts):
    for m, n in opts.sizes:
        if m + n > 4:
            continue
        for fn, f, gn, g in _idempotent_pairs(alg, opts):
            yield Case("up-down-multistrand", (("m", m), ("n", n), ("f", fn), ("g", gn)),
                       library.multistrand_lhs(alg, f, g, m, n), library.multistrand_rhs(alg, f, g, m, n))


@relation("iso-beta-alpha", ISOMORPHISMS, "theo:functor-isos", "the weighted sum of beta o alpha is the identity of Q^n P^m")
def _iso_beta_alpha(alg, opts):
    for m, n in opts.sizes:
        for fn, f, gn, g in _idempotent_pairs(alg, opts):
            for shape in opts.shapes:
                lhs, rhs = library.beta_alpha_sum(alg, f, g, m, n, shape)
                yield Case("iso-beta-alpha", (("m", m), ("n", n), ("f", fn), ("g", gn), ("shape", shape)), lhs, rhs)


@relation("iso-alpha-beta", ISOMORPHISMS, "theo:functor-isos", "alpha_c o beta_{b^v} is the identity when b = c and zero otherwise")
def _iso_alpha_beta(alg, opts):
    for m, n in opts.sizes:
        for fn, f, gn, g in _idempotent_pairs(alg, opts):
            for shape in opts.shapes:
                for k, bb, cc, lhs, rhs in library.alpha_beta_cases(alg, f, g, m, n, shape):
                    params = (("m", m), ("n", n), ("f", fn), ("g", gn), ("shape", shape), ("k", k),
                              ("b", ".".join(alg.labels[b] for b in bb)),
                              ("c", ".".join(alg.labels[c] for c in cc)))
                    yield Case("iso-alpha-beta", params, lhs, rhs)


# ---------------------------------------------------------------------------
# Degree vanishing
# ---------------------------------------------------------------------------

ENDOMORPHISM_WORDS = ("", "P", "Q", "PP", "PQ", "QQ")
_MAX_WIDTH = 4


def _slices_on(alg: FrobeniusAlgebra, word: Tuple[str, ...]) -> Iterator[ir.Slice]:
    """Every single generator that fits on ``word``; dots carry basis labels."""
    for pos, letter in enumerate(word, 1):
        for i in range(alg.dim):
            yield ir.Slice(pos, ir.make_generator(_dot_kind(letter), _v(i)))
    for pos in range(1, len(word)):
        pair = word[pos - 1] + word[pos]
        yield ir.Slice(pos, ir.make_generator(_cross_kind(*pair)))
        if pair == "PQ":
            yield ir.Slice(pos, ir.make_generator("cap_right"))
        elif pair == "QP":
            yield ir.Slice(pos, ir.make_generator("cap_left"))
    if len(word) + 2 <= _MAX_WIDTH:
        for pos in range(1, len(word) + 2):
            yield ir.Slice(pos, ir.make_generator("cup_right"))
            yield ir.Slice(pos, ir.make_generator("cup_left"))


def negative_endomorphisms(alg: FrobeniusAlgebra, word: str, depth: int) -> List[ir.Diagram]:
    """Every stack of at most ``depth`` generators from ``word`` to itself with negative degree."""
    target = tuple(word)
    found: List[ir.Diagram] = []

    def walk(letters: Tuple[str, ...], slices: Tuple[ir.Slice, ...], deg: int) -> None:
        if slices and letters == target and deg < 0:
            found.append(ir.Diagram(ir.ObjectWord(target), ir.ObjectWord(target), slices))
        left = depth - len(slices)
        if not left:
            return
        for sl in _slices_on(alg, letters):
            above = ir.apply_slice(letters, sl)
            if abs(len(above) - len(target)) > 2 * (left - 1):
                continue
            walk(above, slices + (sl,), deg + sl.gen.degree(alg)[0])

    walk(target, (), 0)
    return found


def _slice_text(sl: ir.Slice, alg: FrobeniusAlgebra) -> str:
    if sl.gen.label:
        return f"{sl.gen.kind}({alg.format(sl.gen.vector)})@{sl.pos}"
    return f"{sl.gen.kind}@{sl.pos}"


@relation("end-negative-degree", DEGREE, "lem:end-spaces", "endomorphisms of P^n Q^m of negative degree vanish")
def _negative_degree(alg, opts):
    if alg.delta <= 0:
        yield Case("end-negative-degree", (), [], [], skip=f"trace degree delta={alg.delta} is not positive")
        return
    for word in ENDOMORPHISM_WORDS:
        for D in negative_endomorphisms(alg, word, opts.max_slices):
            params = (("word", word or "1"), ("slices", ",".join(_slice_text(sl, alg) for sl in D.slices)))
            yield Case("end-negative-degree", params, [(Fraction(1), D)], _zero(word))
