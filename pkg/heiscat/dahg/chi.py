"""
D_m acting on (n+m)_n
=====================
``chi_prime(m, n, a)`` is the image of a in A_{n+m}^op, read as the right
multiplication operator it induces on F_n(P^m) = A_{n+m}.  Strand i of P^m
(from the left) sits at tensor slot n+m+1-i, so

    x_i  ->  J_{n+m-i}
    [u]  ->  shift_n(w0 u w0)        (w0 the longest element of S_m)

and products go to the super-opposite product:
chi'(a b) = (-1)^{|a||b|} chi'(b) chi'(a).

The m-disturbance of tau in S_{n+m} counts the points 1..n that tau moves;
chi' raises it by at most one per x, which is what ``certify_injectivity``
exploits on finite truncations.

Usage
-----
    from heiscat.algebra.frobenius import builtin
    from heiscat.dahg import chi, dm

    B = builtin("trivial")
    chi.chi_prime(1, 1, dm.x(B, 1, 1))               # s_1 in A_2
    chi.certify_injectivity(B, 1, 2, 2).injective    # True
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from heiscat import config
from heiscat.algebra import wreath
from heiscat.algebra.frobenius import FrobeniusAlgebra
from heiscat.algebra.linalg import rank_of_rows
from heiscat.algebra.wreath import Perm, WreathElement
from heiscat.bimodule.maps import BimoduleMap
from heiscat.dahg import dm
from heiscat.dahg.dm import DmElement, PbwKey
from heiscat.diagram import ir, library
from heiscat.diagram.functor import evaluate, right_action
from heiscat.diagram.ir import Diagram
from heiscat.errors import IndexOutOfRange, SizeLimit

log = logging.getLogger(__name__)


def check_size(alg: FrobeniusAlgebra, total: int) -> None:
    size = alg.dim ** total * factorial(total)
    if size > config.SIZE_CAP:
        raise SizeLimit(f"A_{total} over {alg.name} has dimension {size} > HEISCAT_SIZE_CAP={config.SIZE_CAP}")


# ---------------------------------------------------------------------------
# The homomorphism
# ---------------------------------------------------------------------------

def reverse_strands(u: WreathElement) -> WreathElement:
    """w0 u w0: slot k goes to slot m+1-k, with Koszul signs."""
    w0 = wreath.from_perm(u.alg, tuple(range(u.n, 0, -1)))
    return w0 * u * w0


def x_image(alg: FrobeniusAlgebra, m: int, n: int, i: int) -> WreathElement:
    """J_{n+m-i}, embedded in A_{n+m}."""
    if not 1 <= i <= m:
        raise IndexOutOfRange(f"x_{i} outside x_1..x_{m}")
    return wreath.jucys_murphy(alg, n + m - i).embed(i - 1)


def _x_monomial_image(alg: FrobeniusAlgebra, m: int, n: int, exps: dm.Exponents) -> WreathElement:
    """x_{g_1} .. x_{g_r} -> (-1)^{sigma r(r-1)/2} J_{g_r} .. J_{g_1}."""
    out = wreath.one(alg, n + m)
    word = [i for i, a in enumerate(exps, 1) for _ in range(a)]
    for i in word:
        out = x_image(alg, m, n, i) * out
    r = len(word)
    if alg.sigma and (r * (r - 1) // 2) % 2:
        out = -out
    return out


def chi_prime(m: int, n: int, a: DmElement) -> WreathElement:
    """The image of a in A_{n+m}; raises SizeLimit past HEISCAT_SIZE_CAP."""
    alg = a.alg
    if a.m != m:
        raise IndexOutOfRange(f"element of D_{a.m} passed as D_{m}")
    if n < 0:
        raise IndexOutOfRange(f"n must be >= 0, got {n}")
    check_size(alg, n + m)
    total = wreath.zero(alg, n + m)
    monomials: Dict[dm.Exponents, WreathElement] = {}
    for (exps, key), c in a.items():
        if exps not in monomials:
            monomials[exps] = _x_monomial_image(alg, m, n, exps)
        u = reverse_strands(wreath.from_key(alg, *key)).shift(n)
        sign = -1 if alg.sigma and sum(exps) % 2 and wreath.tensor_parity(alg, key[0]) else 1
        total = total + (u * monomials[exps]).scale(sign * c)
    return total


def pbw_image(alg: FrobeniusAlgebra, m: int, n: int, key: PbwKey) -> WreathElement:
    return chi_prime(m, n, dm.monomial(alg, *key))


def relation_images(alg: FrobeniusAlgebra, m: int, n: int) -> Iterator[Tuple[str, Tuple[int, ...], WreathElement, WreathElement]]:
    """Both sides of every defining relation of D_m, mapped through chi'.

    Sides are assembled from generator images with the super-opposite
    product, independently of the PBW rewriter.
    """
    sigma = alg.sigma

    def image(a: DmElement) -> WreathElement:
        return chi_prime(m, n, a)

    def op(a: WreathElement, b: WreathElement, sign: int = 1) -> WreathElement:
        return (b * a).scale(sign)

    for i in range(1, m + 1):
        xi = image(dm.x(alg, m, i))
        for pos in range(1, m + 1):
            for b in range(alg.dim):
                label = {b: Fraction(1)}
                before = dm.dot(alg, m, label, pos)
                after = dm.dot(alg, m, alg.nakayama(label) if pos == i else label, pos)
                koszul = -1 if sigma and alg.parities[b] else 1
                lhs = op(xi, image(before), koszul)
                rhs = op(image(after), xi, koszul).scale(koszul)
                yield "dm-x-dot", (i, pos, b), lhs, rhs
        for j in range(i + 1, m + 1):
            xj = image(dm.x(alg, m, j))
            lhs = op(xj, xi, -1 if sigma else 1)
            rhs = op(xi, xj, -1 if sigma else 1).scale(-1 if sigma else 1)
            yield "dm-x-commute", (i, j), lhs, rhs
    for i in range(1, m):
        si = image(dm.s(alg, m, i))
        xi, xnext = image(dm.x(alg, m, i)), image(dm.x(alg, m, i + 1))
        c_before = image(dm.from_wreath(dm.correction(alg, m, i, after=False)))
        c_after = image(dm.from_wreath(dm.correction(alg, m, i, after=True)))
        yield "dm-x-cross", (i,), op(xi, si), op(si, xnext) + c_before
        yield "dm-cross-x", (i,), op(si, xi), op(xnext, si) + c_after
        for j in range(1, m + 1):
            if j not in (i, i + 1):
                xj = image(dm.x(alg, m, j))
                yield "dm-cross-far-x", (i, j), op(si, xj), op(xj, si)


# ---------------------------------------------------------------------------
# Disturbance filtration
# ---------------------------------------------------------------------------

def disturbance(tau: Perm, n: int) -> int:
    """|{i <= n : tau(i) != i}|."""
    return sum(1 for i in range(1, min(n, len(tau)) + 1) if tau[i - 1] != i)


def filtration_level(w: WreathElement, n: int) -> int:
    """Smallest k with w in the k-th step of the m-disturbance filtration."""
    return max((disturbance(p, n) for (_, p), _ in w.items()), default=0)


def leading_part(w: WreathElement, n: int, level: int) -> WreathElement:
    """The terms of disturbance exactly ``level``: the image in the associated graded piece."""
    return WreathElement(w.alg, w.n, {k: c for k, c in w.items() if disturbance(k[1], n) == level})


def _check_tij(indices: Sequence[int], j: int, n: int, m: int) -> None:
    if any(not 1 <= i <= n for i in indices):
        raise IndexOutOfRange(f"indices {list(indices)} must lie in 1..{n}")
    if not n < j <= n + m:
        raise IndexOutOfRange(f"j={j} must satisfy {n} < j <= {n + m}")


def tij_graded_product(alg: FrobeniusAlgebra, indices: Sequence[int], j: int, n: int, m: int) -> WreathElement:
    """t_{i_l,j} ... t_{i_1,j} in A_{n+m}, reduced modulo lower disturbance."""
    _check_tij(indices, j, n, m)
    total = n + m
    out = wreath.one(alg, total)
    for i in indices:
        out = wreath.t_elem(alg, i, j, total) * out
    return leading_part(out, n, len(indices))


def tij_leading_formula(alg: FrobeniusAlgebra, indices: Sequence[int], j: int, n: int, m: int) -> WreathElement:
    """Closed form of the graded product for strictly increasing indices.

    (-1)^{sigma l(l+1)/2} sum over b_1..b_l of
    (-1)^{sigma |b_l| + sum |b_s||b_{s+1}|} beta (i_1, .., i_l, j), where beta
    carries b_1^v at i_1, b_p^v b_{p-1} at i_p and b_l at j.
    """
    _check_tij(indices, j, n, m)
    if list(indices) != sorted(set(indices)):
        raise IndexOutOfRange(f"indices {list(indices)} must be strictly increasing")
    total, ell = n + m, len(indices)
    if not ell:
        return wreath.one(alg, total)
    sigma, par = alg.sigma, alg.parities
    perm = wreath.cycle(list(indices) + [j], total)
    out = wreath.zero(alg, total)
    for bs in _products(alg.dim, ell):
        exponent = sigma * ell * (ell + 1) // 2 + sigma * par[bs[-1]]
        exponent += sum(par[bs[s]] * par[bs[s + 1]] for s in range(ell - 1))
        factors = [alg.unit] * total
        factors[indices[0] - 1] = alg.dual_basis[bs[0]]
        for p in range(1, ell):
            factors[indices[p] - 1] = alg.mul(alg.dual_basis[bs[p]], {bs[p - 1]: Fraction(1)})
        factors[j - 1] = {bs[-1]: Fraction(1)}
        if any(not f for f in factors):
            continue
        out = out + wreath.from_factors(alg, factors, perm).scale(-1 if exponent % 2 else 1)
    return out


def _products(dim: int, ell: int) -> Iterator[Tuple[int, ...]]:
    if not ell:
        yield ()
        return
    for head in _products(dim, ell - 1):
        for b in range(dim):
            yield head + (b,)


# ---------------------------------------------------------------------------
# Injectivity on truncations
# ---------------------------------------------------------------------------

@dataclass
class InjectivityReport:
    algebra: str
    m: int
    n: int
    cap: int
    count: int
    rank: int

    @property
    def injective(self) -> bool:
        return self.rank == self.count

    @property
    def deficit(self) -> int:
        return self.count - self.rank

    def to_tree(self) -> Dict[str, object]:
        return {"algebra": self.algebra, "m": self.m, "n": self.n, "x_degree_cap": self.cap,
                "count": self.count, "rank": self.rank, "injective": self.injective}


def _row(alg: FrobeniusAlgebra, m: int, n: int, key: PbwKey, columns: Dict) -> Dict[int, Fraction]:
    return {columns[k]: c for k, c in pbw_image(alg, m, n, key).items()}


def certify_injectivity(alg: FrobeniusAlgebra, m: int, n: int, cap: int,
                        workers: Optional[int] = None) -> InjectivityReport:
    """Exact rank of chi'_{m,n} on the PBW basis with x-degree <= cap.

    Full rank certifies injectivity on that truncation only.
    """
    basis = dm.pbw_basis(alg, m, cap)
    columns = {k: c for c, k in enumerate(wreath.basis_keys(alg, n + m))}
    rows: List[Dict[int, Fraction]] = Parallel(n_jobs=workers or config.WORKERS)(
        delayed(_row)(alg, m, n, key, columns) for key in basis)
    rank = rank_of_rows(rows, len(columns))
    report = InjectivityReport(alg.name, m, n, cap, len(basis), rank)
    log.info("chi'_{%d,%d} on %s up to x-degree %d: rank %d of %d", m, n, alg.name, cap, rank, len(basis))
    return report


# ---------------------------------------------------------------------------
# The diagrammatic side
# ---------------------------------------------------------------------------

def chi_diagram(alg: FrobeniusAlgebra, key: PbwKey) -> Diagram:
    """chi_m of x^a [u] on P^m: the dots and crossings of u below, curls above, x_1 on top."""
    exps, (t, p) = key
    m = len(exps)
    u = reverse_strands(wreath.from_key(alg, t, p))
    D = library.element_diagram(u, "P")
    for i in range(m, 0, -1):
        if exps[i - 1]:
            D = ir.compose(library.curls_on("P" * m, i, exps[i - 1]), D)
    return D


def triangle(alg: FrobeniusAlgebra, key: PbwKey, n: int) -> Tuple[BimoduleMap, BimoduleMap]:
    """(F_n(chi_m(x)), right action of chi'_{m,n}(x)) on F_n(P^m); equal when the square commutes."""
    m = len(key[0])
    return evaluate(chi_diagram(alg, key), alg, n), right_action(alg, pbw_image(alg, m, n, key), m, n)
