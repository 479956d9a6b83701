"""
Verification suites
===================
Each suite turns one layer's invariants into report records for a single
algebra.  Diagram suites go through the relation catalog and the joblib
harness; the algebraic suites compare exact values directly.

    frobenius         dual basis, double dual, Nakayama law
    wreath            free bases and dual sets of A_n in A_{n+1}, the Nakayama law of A_n
    adjunctions       the right and left zigzag identities as bimodule maps
    local_relations   the relation catalog, evaluated under F_n
    curls_bubbles     derived curl and bubble relations, same catalog
    isomorphisms      the categorical commutator isomorphisms, same catalog
    degree_vanishing  negative-degree endomorphisms of short words
    heisenberg        pairings, normal ordering, the involution omega
    dahg              D_m relations, chi' as a homomorphism, injectivity

Randomized checks draw from ``random.Random(seed)`` so a report names
everything needed to reproduce it.

Usage
-----
    from heiscat.algebra.frobenius import builtin
    from heiscat.cli.suites import SuiteOptions, run_suite

    records = run_suite("wreath", builtin("clifford"), SuiteOptions(seed=7))
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from heiscat import config
from heiscat.algebra import wreath
from heiscat.algebra.frobenius import BUILTIN_IDEMPOTENTS, FrobeniusAlgebra, Vector
from heiscat.algebra.wreath import WreathElement
from heiscat.bimodule.local import ADJUNCTIONS, SHAPES, adjunction_map
from heiscat.bimodule.maps import BimoduleMap, compose, identity, whisker
from heiscat.bimodule.words import WordBimodule, region_labels
from heiscat.cli.report import CaseRecord, failed, from_check, passed, skipped, verdict
from heiscat.dahg import chi, dm
from heiscat.diagram import harness
from heiscat.diagram.relations import DEGREE, DERIVED, ISOMORPHISMS, LOCAL, Options, in_suite
from heiscat.errors import HeisCatError, SizeLimit
from heiscat.heisenberg.algebra import (
    LEFTMOST,
    PRESENTATIONS,
    RIGHTMOST,
    GeneratorSymbol,
    HeisenbergAlgebra,
    HeisenbergElement,
    Word,
    omega_presentation,
    symbol,
)
from heiscat.heisenberg.pairing import EXT, SYM, oracle_pairing

log = logging.getLogger(__name__)

Params = Tuple[Tuple[str, object], ...]


@dataclass(frozen=True)
class SuiteOptions:
    """What ``check`` passes down from the command line."""

    max_n: int = 3
    m: Optional[int] = None
    n: Optional[int] = None
    f: Optional[str] = None
    g: Optional[str] = None
    seed: int = config.DEFAULT_SEED
    samples: int = 100
    workers: Optional[int] = None


def labels_for(alg: FrobeniusAlgebra, max_n: int) -> List[int]:
    """0..max_n, cut to 0..2 for algebras above LARGE_ALGEBRA_DIM."""
    top = min(max_n, 2) if alg.dim > config.LARGE_ALGEBRA_DIM else max_n
    return list(range(top + 1))


def _size_ok(alg: FrobeniusAlgebra, n: int) -> bool:
    return alg.dim ** n * factorial(n) <= config.SIZE_CAP


def _is_ground_field(alg: FrobeniusAlgebra) -> bool:
    return alg.dim == 1 and alg.degrees == [0] and alg.parities == [0]


def parse_idempotent(alg: FrobeniusAlgebra, text: str) -> Vector:
    if text.strip() == "1":
        return dict(alg.unit)
    return alg.parse_element(text)


def idempotent_family(alg: FrobeniusAlgebra, opts: SuiteOptions, primitive: bool = False) -> List[Tuple[str, Vector]]:
    """--f/--g when given; else the unit, or the builtin primitive idempotents when ``primitive``."""
    chosen = [t for t in (opts.f, opts.g) if t]
    if chosen:
        return [(t, parse_idempotent(alg, t)) for t in dict.fromkeys(chosen)]
    named = BUILTIN_IDEMPOTENTS.get(alg.name, [])
    if primitive and named:
        return [(label, alg.basis_vector(alg.index_of(label))) for label in named]
    family = [("1", dict(alg.unit))]
    if not primitive:
        family += [(label, alg.basis_vector(alg.index_of(label))) for label in named]
    return family


# ---------------------------------------------------------------------------
# frobenius
# ---------------------------------------------------------------------------

def frobenius_suite(alg: FrobeniusAlgebra, opts: SuiteOptions) -> List[CaseRecord]:
    out: List[CaseRecord] = []
    par, sigma = alg.parities, alg.sigma
    e = [alg.basis_vector(i) for i in range(alg.dim)]
    for k in range(alg.dim):
        for j in range(alg.dim):
            value = alg.trace(alg.mul(e[k], alg.dual_basis[j]))
            expected = 1 if k == j else 0
            out.append(verdict("frobenius-dual-basis", (("k", alg.labels[k]), ("l", alg.labels[j])),
                               value == expected, f"tr(b_k b_l^v) = {value}, expected {expected}"))
    double = alg.double_dual_basis()
    for f in range(alg.dim):
        sign = -1 if (sigma * par[f] + par[f]) % 2 else 1
        lhs = double[f]
        rhs = {i: sign * c for i, c in alg.nakayama(e[f]).items()}
        out.append(verdict("frobenius-double-dual", (("f", alg.labels[f]),), lhs == rhs,
                           f"(f^v)^v = {alg.format(lhs)}, expected {alg.format(rhs)}"))
    for a in range(alg.dim):
        for b in range(alg.dim):
            sign = -1 if par[a] and par[b] else 1
            lhs = alg.trace(alg.mul(e[a], e[b]))
            rhs = sign * alg.trace(alg.mul(e[b], alg.nakayama(e[a])))
            out.append(verdict("frobenius-nakayama", (("a", alg.labels[a]), ("b", alg.labels[b])), lhs == rhs,
                               f"tr(ab) = {lhs} but tr(b psi(a)) gives {rhs}"))
    symmetric = alg.is_supersymmetric()
    out.append(verdict("frobenius-symmetric-iff-psi-identity", (), symmetric == alg.nakayama_is_identity(),
                       f"supersymmetric={symmetric} but psi identity={alg.nakayama_is_identity()}"))
    out.append(_casimir(alg))
    return out


def _casimir(alg: FrobeniusAlgebra) -> CaseRecord:
    """sum_b b (x) b^v computed in the basis and in the dual basis agree."""
    par, sigma = alg.parities, alg.sigma
    lhs: Dict[Tuple[int, int], Fraction] = {}
    rhs: Dict[Tuple[int, int], Fraction] = {}
    for b in range(alg.dim):
        for j, c in alg.dual_basis[b].items():
            lhs[(b, j)] = lhs.get((b, j), Fraction(0)) + c
        sign = -1 if (sigma * par[b] + par[b]) % 2 else 1
        for i, c1 in alg.dual_basis[b].items():
            for j, c2 in alg.nakayama(alg.basis_vector(b)).items():
                rhs[(i, j)] = rhs.get((i, j), Fraction(0)) + sign * c1 * c2
    lhs = {k: v for k, v in lhs.items() if v}
    rhs = {k: v for k, v in rhs.items() if v}
    return verdict("frobenius-casimir", (), lhs == rhs, "the Casimir element depends on the basis")


# ---------------------------------------------------------------------------
# wreath
# ---------------------------------------------------------------------------

def wreath_suite(alg: FrobeniusAlgebra, opts: SuiteOptions) -> List[CaseRecord]:
    out: List[CaseRecord] = []
    for n in range(3):
        params = (("n", n),)
        if not _size_ok(alg, n + 1):
            out.append(skipped("wreath-free-basis", params, f"A_{n + 1} over {alg.name} exceeds the size cap"))
            out.append(skipped("wreath-dual-sets", params, f"A_{n + 1} over {alg.name} exceeds the size cap"))
            continue
        for side in ("left", "right"):
            rank, dim = wreath.free_basis_rank(alg, n, side)
            out.append(verdict("wreath-free-basis", params + (("side", side),), rank == dim,
                               f"span has rank {rank}, A_{n + 1} has dimension {dim}"))
        out.append(_dual_sets(alg, n))
    rng = random.Random(opts.seed)
    for n in (1, 2):
        if not _size_ok(alg, n):
            out.append(skipped("wreath-nakayama", (("n", n),), f"A_{n} over {alg.name} exceeds the size cap"))
            continue
        out.append(_nakayama_n(alg, n, rng, opts.samples))
    return out


def _dual_sets(alg: FrobeniusAlgebra, n: int) -> CaseRecord:
    xs, ys = wreath.frobext_dual_sets(alg, n)
    unit = wreath.one(alg, n)
    for xkey, x in xs:
        for ykey, y in ys:
            got = wreath.extension_trace(x * y)
            want = unit if xkey == ykey else wreath.zero(alg, n)
            if got != want:
                return failed("wreath-dual-sets", (("n", n),),
                              f"tr(x_{xkey} y_{ykey}) = {got.format()}, expected {want.format()}")
    return passed("wreath-dual-sets", (("n", n),))


def random_basis_element(alg: FrobeniusAlgebra, n: int, rng: random.Random) -> WreathElement:
    tensor = tuple(rng.randrange(alg.dim) for _ in range(n))
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return wreath.from_key(alg, tensor, tuple(perm), rng.choice((1, -1, 2, Fraction(1, 2))))


def _nakayama_n(alg: FrobeniusAlgebra, n: int, rng: random.Random, samples: int) -> CaseRecord:
    params = (("n", n), ("samples", samples))
    for t in range(samples):
        a, b = random_basis_element(alg, n, rng), random_basis_element(alg, n, rng)
        sign = -1 if a.parity() and b.parity() else 1
        lhs = wreath.trace_n(a * b)
        rhs = sign * wreath.trace_n(b * wreath.nakayama_n(a))
        if lhs != rhs:
            return failed("wreath-nakayama", params, f"sample {t}: tr(ab) = {lhs}, tr(b psi(a)) = {rhs}")
    return passed("wreath-nakayama", params)


# ---------------------------------------------------------------------------
# adjunctions
# ---------------------------------------------------------------------------

# (strand, name, slices bottom first as (position, adjunction), sign exponent of sigma)
ZIGZAGS = (
    ("P", "right", ((2, "eta_R"), (1, "eps_R")), 0),
    ("Q", "right", ((1, "eta_R"), (2, "eps_R")), 0),
    ("P", "left", ((1, "eta_L"), (2, "eps_L")), 0),
    ("Q", "left", ((2, "eta_L"), (1, "eps_L")), 1),
)


def zigzag_map(alg: FrobeniusAlgebra, word: str, slices: Sequence[Tuple[int, str]], n: int) -> BimoduleMap:
    """Compose the whiskered adjunction maps of ``slices`` on F_n(word)."""
    current = tuple(word)
    total: Optional[BimoduleMap] = None
    for pos, kind in slices:
        src, tgt = SHAPES[ADJUNCTIONS[kind]]
        start = pos - 1
        label = region_labels(current, n)[start + len(src)]
        step = whisker("".join(current[:start]), adjunction_map(alg, kind, label),
                       "".join(current[start + len(src):]), n)
        total = step if total is None else compose(step, total)
        current = current[:start] + tuple(tgt) + current[start + len(src):]
    return total


def adjunctions_suite(alg: FrobeniusAlgebra, opts: SuiteOptions) -> List[CaseRecord]:
    out: List[CaseRecord] = []
    for n in range(min(opts.max_n, 2) + 1):
        for word, side, slices, twist in ZIGZAGS:
            rid = f"zigzag-{side}"
            params = (("n", n), ("strand", word))
            try:
                f = zigzag_map(alg, word, slices, n)
            except SizeLimit as exc:
                out.append(skipped(rid, params, str(exc)))
                continue
            if twist and alg.sigma:
                f = f.scale(-1)
            diff = f.first_difference(identity(WordBimodule(alg, word, n)))
            out.append(verdict(rid, params, diff is None, f"differs from the identity at {diff}"))
    return out


# ---------------------------------------------------------------------------
# relation catalog suites
# ---------------------------------------------------------------------------

def catalog_options(alg: FrobeniusAlgebra, opts: SuiteOptions) -> Options:
    kwargs: Dict[str, object] = {}
    if opts.m is not None or opts.n is not None:
        kwargs["sizes"] = ((opts.m or 1, opts.n or 1),)
    if opts.f or opts.g:
        kwargs["idempotents"] = tuple((name, tuple(sorted(vec.items())))
                                      for name, vec in idempotent_family(alg, opts))
    return Options(**kwargs)


def catalog_suite(suite: str) -> Callable[[FrobeniusAlgebra, SuiteOptions], List[CaseRecord]]:
    def run(alg: FrobeniusAlgebra, opts: SuiteOptions) -> List[CaseRecord]:
        labels = labels_for(alg, opts.max_n)
        if suite == ISOMORPHISMS:
            labels = [n for n in labels if n <= 2]
        catalog_opts = catalog_options(alg, opts)
        out: List[CaseRecord] = []
        cases = []
        for rel in in_suite(suite):
            try:
                cases.extend(rel.cases(alg, catalog_opts))
            except SizeLimit as exc:
                out.append(skipped(rel.id, (), str(exc)))
            except HeisCatError as exc:
                log.warning("building %s failed: %s", rel.id, exc)
                out.append(failed(rel.id, (), f"could not build cases: {exc}"))
        out.extend(from_check(r) for r in harness.run_cases(cases, alg, labels, opts.workers))
        return out
    return run


# ---------------------------------------------------------------------------
# heisenberg
# ---------------------------------------------------------------------------

def heisenberg_suite(alg: FrobeniusAlgebra, opts: SuiteOptions) -> List[CaseRecord]:
    family = idempotent_family(alg, opts, primitive=True)
    H = HeisenbergAlgebra(alg, [vec for _, vec in family])
    out = _pairing_cases(H, family)
    out += _khovanov_cases(alg)
    out.append(_even_reduction(alg))
    rng = random.Random(opts.seed)
    for presentation in PRESENTATIONS:
        out += _rewriting_properties(H, presentation, rng, opts.samples)
    return out


def _pairing_cases(H: HeisenbergAlgebra, family: List[Tuple[str, Vector]]) -> List[CaseRecord]:
    out: List[CaseRecord] = []
    for i, (fname, f) in enumerate(family, 1):
        for j, (gname, g) in enumerate(family, 1):
            for k in range(1, 4):
                for shape in (SYM, EXT):
                    params = (("f", fname), ("g", gname), ("k", k), ("shape", shape))
                    try:
                        want = oracle_pairing(H.alg, f, g, k, shape)
                    except SizeLimit as exc:
                        out.append(skipped("heis-pairing-oracle", params, str(exc)))
                        continue
                    got = H.pairing(i, j, k, shape)
                    out.append(verdict("heis-pairing-oracle", params, got == want,
                                       f"closed form {got}, oracle {want}"))
    return out


def _khovanov_cases(alg: FrobeniusAlgebra) -> List[CaseRecord]:
    if not _is_ground_field(alg):
        return [skipped("heis-ground-field-relation", (), "needs B = F")]
    H = HeisenbergAlgebra(alg)
    out: List[CaseRecord] = []
    for n in range(1, 5):
        for m in range(1, 5):
            got = H.normal_order(H.word([symbol("Q", 1, n), symbol("P", 1, m)]))
            want = HeisenbergElement()
            for k in range(min(n, m) + 1):
                word = tuple(s for s in (symbol("P", 1, m - k) if m > k else None,
                                         symbol("Q", 1, n - k) if n > k else None) if s)
                want = want + H.normal_order(H.word(word))
            out.append(verdict("heis-ground-field-relation", (("n", n), ("m", m)), got == want,
                               f"Q^({n}) P^({m}) = {got}, expected {want}"))
    return out


def _even_reduction(alg: FrobeniusAlgebra) -> CaseRecord:
    H = HeisenbergAlgebra(alg, type_q=(1,))
    q1 = symbol("Q", 1, 1)
    got = H.generator(symbol("Q", 1, 2))
    want = H.normal_order(H.word([q1, q1], Fraction(1, 2)))
    return verdict("heis-even-reduction", (("size", 2),), got == want, f"Q^(2) = {got}, expected {want}")


def random_word(H: HeisenbergAlgebra, presentation: str, rng: random.Random, length: int) -> Word:
    p_shape, q_shape = PRESENTATIONS[presentation]
    word = []
    for _ in range(length):
        side = rng.choice("PQ")
        shape = p_shape if side == "P" else q_shape
        word.append(GeneratorSymbol(side, rng.randint(1, len(H.idempotents)), shape, rng.randint(1, 2)))
    return tuple(word)


def _rewriting_properties(H: HeisenbergAlgebra, presentation: str, rng: random.Random,
                          samples: int) -> List[CaseRecord]:
    params = (("presentation", presentation), ("samples", samples))
    flipped = omega_presentation(presentation)
    problems: Dict[str, str] = {}
    for t in range(samples):
        words = [random_word(H, presentation, rng, rng.randint(1, 3)) for _ in range(3)]
        a, b, c = (H.normal_order(H.word(w), presentation) for w in words)
        if "heis-confluence" not in problems:
            right = H.normal_order(H.word(words[0] + words[1]), presentation, RIGHTMOST)
            left = H.normal_order(H.word(words[0] + words[1]), presentation, LEFTMOST)
            if left != right:
                problems["heis-confluence"] = f"sample {t}: leftmost {left}, rightmost {right}"
        if "heis-associativity" not in problems:
            lhs = H.multiply(H.multiply(a, b, presentation), c, presentation)
            rhs = H.multiply(a, H.multiply(b, c, presentation), presentation)
            if lhs != rhs:
                problems["heis-associativity"] = f"sample {t}: (ab)c = {lhs}, a(bc) = {rhs}"
        if "heis-omega-involution" not in problems and H.omega(H.omega(a)) != a:
            problems["heis-omega-involution"] = f"sample {t}: omega^2 moves {a}"
        if "heis-omega-natural" not in problems:
            lhs = H.omega(H.normal_order(H.word(words[0] + words[1]), presentation))
            rhs = H.normal_order(H.omega_words(H.word(words[0] + words[1])), flipped)
            if lhs != rhs:
                problems["heis-omega-natural"] = f"sample {t}: {lhs} != {rhs}"
    rids = ("heis-confluence", "heis-associativity", "heis-omega-involution", "heis-omega-natural")
    return [failed(rid, params, problems[rid]) if rid in problems else passed(rid, params) for rid in rids]


# ---------------------------------------------------------------------------
# dahg
# ---------------------------------------------------------------------------

INJECTIVITY_TRUNCATIONS = ((1, 2, 2), (2, 2, 1))


def dahg_suite(alg: FrobeniusAlgebra, opts: SuiteOptions) -> List[CaseRecord]:
    ms = [opts.m] if opts.m is not None else [1, 2]
    ns = [opts.n] if opts.n is not None else list(range(min(opts.max_n, 2) + 1))
    rng = random.Random(opts.seed)
    out: List[CaseRecord] = []
    for m in ms:
        for n in ns:
            out += _relation_cases(alg, m, n)
            out.append(_homomorphism(alg, m, n, rng, min(opts.samples, 20)))
    out += _ground_field_cases(alg)
    for m, n, cap in INJECTIVITY_TRUNCATIONS:
        out.append(_injectivity(alg, m, n, cap, opts.workers))
    out += _tij_cases(alg)
    out += _triangle_cases(alg, ms, ns)
    return out


def _relation_cases(alg: FrobeniusAlgebra, m: int, n: int) -> List[CaseRecord]:
    try:
        images = list(chi.relation_images(alg, m, n))
    except SizeLimit as exc:
        return [skipped("dm-relations", (("m", m), ("n", n)), str(exc))]
    out = []
    for name, rel_params, lhs, rhs in images:
        params = (("m", m), ("n", n), ("at", ".".join(str(p) for p in rel_params)))
        out.append(verdict(name, params, lhs == rhs, f"{lhs.format()} != {rhs.format()}"))
    return out


def random_pbw(alg: FrobeniusAlgebra, m: int, rng: random.Random) -> dm.DmElement:
    exps = tuple(rng.randint(0, 1) for _ in range(m))
    u = random_basis_element(alg, m, rng)
    (key, c), = u.items()
    return dm.monomial(alg, exps, key, c)


def _homomorphism(alg: FrobeniusAlgebra, m: int, n: int, rng: random.Random, samples: int) -> CaseRecord:
    params = (("m", m), ("n", n), ("samples", samples))
    try:
        chi.check_size(alg, n + m)
        for t in range(samples):
            a, b = random_pbw(alg, m, rng), random_pbw(alg, m, rng)
            lhs = chi.chi_prime(m, n, a * b)
            sign = -1 if a.parity() and b.parity() else 1
            rhs = (chi.chi_prime(m, n, b) * chi.chi_prime(m, n, a)).scale(sign)
            if lhs != rhs:
                return failed("dm-homomorphism", params, f"sample {t}: chi'({a.format()} * {b.format()}) differs")
    except SizeLimit as exc:
        return skipped("dm-homomorphism", params, str(exc))
    return passed("dm-homomorphism", params)


def _ground_field_cases(alg: FrobeniusAlgebra) -> List[CaseRecord]:
    if not _is_ground_field(alg):
        return [skipped("dm-degenerate-affine", (), "needs B = F")]
    x1, x2, s1 = dm.x(alg, 2, 1), dm.x(alg, 2, 2), dm.s(alg, 2, 1)
    lhs, rhs = x1 * s1, s1 * x2 + dm.one(alg, 2)
    return [verdict("dm-degenerate-affine", (), lhs == rhs, f"x1 s1 = {lhs.format()}, s1 x2 + 1 = {rhs.format()}")]


def _injectivity(alg: FrobeniusAlgebra, m: int, n: int, cap: int, workers: Optional[int]) -> CaseRecord:
    params = (("m", m), ("n", n), ("cap", cap))
    try:
        chi.check_size(alg, n + m)
        rep = chi.certify_injectivity(alg, m, n, cap, workers)
    except SizeLimit as exc:
        return skipped("dm-injectivity", params, str(exc))
    return verdict("dm-injectivity", params, rep.injective,
                   f"rank {rep.rank} of {rep.count}: kernel of dimension {rep.deficit}")


def _tij_cases(alg: FrobeniusAlgebra) -> List[CaseRecord]:
    out: List[CaseRecord] = []
    for n, m in ((2, 1), (2, 2)):
        if not _size_ok(alg, n + m):
            out.append(skipped("dm-tij-leading", (("n", n), ("m", m)), f"A_{n + m} exceeds the size cap"))
            continue
        for indices in ((1,), (2,), (1, 2)):
            for j in range(n + 1, n + m + 1):
                params = (("n", n), ("m", m), ("i", ".".join(map(str, indices))), ("j", j))
                got = chi.tij_graded_product(alg, indices, j, n, m)
                want = chi.tij_leading_formula(alg, indices, j, n, m)
                out.append(verdict("dm-tij-leading", params, got == want,
                                   f"product {got.format()}, formula {want.format()}"))
    return out


def _triangle_cases(alg: FrobeniusAlgebra, ms: Sequence[int], ns: Sequence[int]) -> List[CaseRecord]:
    out: List[CaseRecord] = []
    for m in ms:
        try:
            keys = dm.pbw_basis(alg, m, 1)
        except SizeLimit as exc:
            out.append(skipped("dm-diagram-triangle", (("m", m),), str(exc)))
            continue
        for n in ns:
            params = (("m", m), ("n", n))
            try:
                chi.check_size(alg, n + m)
                bad = next((key for key in keys if not _triangle_commutes(alg, key, n)), None)
            except SizeLimit as exc:
                out.append(skipped("dm-diagram-triangle", params, str(exc)))
                continue
            out.append(verdict("dm-diagram-triangle", params, bad is None,
                               f"F_n(chi_m) and chi' disagree on {dm.monomial(alg, *bad).format() if bad else ''}"))
    return out


def _triangle_commutes(alg: FrobeniusAlgebra, key: dm.PbwKey, n: int) -> bool:
    lhs, rhs = chi.triangle(alg, key, n)
    return lhs.first_difference(rhs) is None


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

SUITES: Dict[str, Callable[[FrobeniusAlgebra, SuiteOptions], List[CaseRecord]]] = {
    "frobenius": frobenius_suite,
    "wreath": wreath_suite,
    "adjunctions": adjunctions_suite,
    LOCAL: catalog_suite(LOCAL),
    DERIVED: catalog_suite(DERIVED),
    ISOMORPHISMS: catalog_suite(ISOMORPHISMS),
    DEGREE: catalog_suite(DEGREE),
    "heisenberg": heisenberg_suite,
    "dahg": dahg_suite,
}
ALL = "all"


def run_suite(name: str, alg: FrobeniusAlgebra, opts: SuiteOptions) -> List[CaseRecord]:
    """Records of one suite, or of every suite for ``all``; raises KeyError on an unknown name."""
    names = list(SUITES) if name == ALL else [name]
    records: List[CaseRecord] = []
    for suite in names:
        log.info("suite %s on %s", suite, alg.name)
        records.extend(SUITES[suite](alg, opts))
    return records
