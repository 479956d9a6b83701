"""
Wreath product algebras A_n = B^{(x)n} x| S_n
=============================================
A WreathElement is a sparse rational combination of basis keys
``(tensor, perm)``: ``tensor`` is a tuple of n basis indices of B and ``perm``
a permutation of 1..n in one-line notation.  Permutations compose as maps,
``(s o t)(x) = s(t(x))``, and ``tau`` acts on tensors by moving the factor in
slot k to slot tau(k), with a Koszul sign for every pair of odd factors whose
order is reversed.

    (b1 tau1)(b2 tau2) = b1 (tau1 . b2) (tau1 o tau2)

The unit of B need not be a basis vector (zigzag_a2 has 1 = e1 + e2), so
anything built from ``1^{(x)k}`` is expanded multilinearly.

Usage
-----
    from heiscat.algebra.frobenius import builtin
    from heiscat.algebra import wreath

    B = builtin("trivial")
    J1 = wreath.jucys_murphy(B, 1)            # s_1 in A_2
    J1 * J1 == wreath.one(B, 2)               # True
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from heiscat import config
from heiscat.algebra.frobenius import FrobeniusAlgebra, Vector, add_into
from heiscat.algebra.linalg import rank_of_rows
from heiscat.errors import (
    IndexOutOfRange,
    NotDegreeZero,
    NotHomogeneous,
    NotIdempotent,
    RankMismatch,
    SizeLimit,
)

log = logging.getLogger(__name__)

Perm = Tuple[int, ...]
Tensor = Tuple[int, ...]
Key = Tuple[Tensor, Perm]


# ---------------------------------------------------------------------------
# Permutations (one-line, 1-based)
# ---------------------------------------------------------------------------

def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def compose(s: Perm, t: Perm) -> Perm:
    """s o t: apply t first."""
    return tuple(s[x - 1] for x in t)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p, start=1):
        out[x - 1] = i
    return tuple(out)


def length(p: Perm) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def transposition(i: int, j: int, n: int) -> Perm:
    out = list(range(1, n + 1))
    out[i - 1], out[j - 1] = j, i
    return tuple(out)


def simple(i: int, n: int) -> Perm:
    if not 1 <= i < n:
        raise IndexOutOfRange(f"s_{i} does not exist in S_{n}")
    return transposition(i, i + 1, n)


def chain(indices: Iterable[int], n: int) -> Perm:
    """s_{a1} o s_{a2} o ... for the given sequence of simple reflections."""
    out = identity_perm(n)
    for i in indices:
        out = compose(out, simple(i, n))
    return out


def cycle(points: Sequence[int], n: int) -> Perm:
    """The cycle p1 -> p2 -> ... -> pk -> p1."""
    out = list(range(1, n + 1))
    for a, b in zip(points, list(points[1:]) + [points[0]]):
        out[a - 1] = b
    return tuple(out)


def extend(p: Perm, n: int) -> Perm:
    """Embed S_k into S_n fixing k+1..n."""
    return tuple(p) + tuple(range(len(p) + 1, n + 1))


def shift_perm(p: Perm, k: int) -> Perm:
    """Embed S_m into S_{k+m} acting on the last m points."""
    return tuple(range(1, k + 1)) + tuple(x + k for x in p)


def reduced_word(p: Perm) -> List[int]:
    """A reduced word [a1, ..., ak] with p = s_{a1} o ... o s_{ak}."""
    word: List[int] = []
    cur = list(p)
    while True:
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                word.append(i + 1)
                break
        else:
            return list(reversed(word))


def all_perms(n: int) -> Iterator[Perm]:
    return itertools.permutations(range(1, n + 1))


# ---------------------------------------------------------------------------
# Tensor arithmetic
# ---------------------------------------------------------------------------

def tensor_parity(alg: FrobeniusAlgebra, tensor: Tensor) -> int:
    return sum(alg.parities[i] for i in tensor) % 2


def tensor_degree(alg: FrobeniusAlgebra, tensor: Tensor) -> int:
    return sum(alg.degrees[i] for i in tensor)


def super_permute(alg: FrobeniusAlgebra, perm: Perm, tensor: Tensor) -> Tuple[int, Tensor]:
    """Move slot k to slot perm(k); returns (sign, tensor)."""
    par = [alg.parities[i] for i in tensor]
    inversions = 0
    for k in range(len(perm)):
        if not par[k]:
            continue
        for m in range(k + 1, len(perm)):
            if par[m] and perm[k] > perm[m]:
                inversions += 1
    out = [0] * len(tensor)
    for k, x in enumerate(tensor):
        out[perm[k] - 1] = x
    return (-1 if inversions % 2 else 1), tuple(out)


def super_permute_by_word(alg: FrobeniusAlgebra, word: Sequence[int], tensor: Tensor) -> Tuple[int, Tensor]:
    """Same action, one adjacent transposition at a time (rightmost letter first)."""
    sign, cur = 1, list(tensor)
    for i in reversed(word):
        if alg.parities[cur[i - 1]] and alg.parities[cur[i]]:
            sign = -sign
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
    return sign, tuple(cur)


def expand_factors(alg: FrobeniusAlgebra, factors: Sequence[Vector]) -> Dict[Tensor, Fraction]:
    """Multilinear expansion of f1 (x) ... (x) fn into basis tensors."""
    out: Dict[Tensor, Fraction] = {}
    for combo in itertools.product(*(sorted(f.items()) for f in factors)):
        coeff = Fraction(1)
        for _, c in combo:
            coeff *= c
        add_into(out, tuple(i for i, _ in combo), coeff)
    return out


@lru_cache(maxsize=None)
def _tensor_product(alg: FrobeniusAlgebra, x: Tensor, y: Tensor) -> Tuple[Tuple[Tensor, Fraction], ...]:
    odd = 0
    seen_y = 0
    for k in range(len(x)):
        if alg.parities[x[k]]:
            odd += seen_y
        seen_y += alg.parities[y[k]]
    sign = -1 if odd % 2 else 1
    factors = [alg.mul_basis(a, b) for a, b in zip(x, y)]
    if any(not f for f in factors):
        return ()
    return tuple((t, sign * c) for t, c in expand_factors(alg, factors).items())


@lru_cache(maxsize=None)
def mul_keys(alg: FrobeniusAlgebra, k1: Key, k2: Key) -> Tuple[Tuple[Key, Fraction], ...]:
    (t1, p1), (t2, p2) = k1, k2
    sign, moved = super_permute(alg, p1, t2)
    perm = compose(p1, p2)
    return tuple(((t, perm), sign * c) for t, c in _tensor_product(alg, t1, moved))


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------

class WreathElement:
    """An element of A_n.  Treat as immutable."""

    __slots__ = ("alg", "n", "_terms")

    def __init__(self, alg: FrobeniusAlgebra, n: int, terms: Optional[Dict[Key, Fraction]] = None):
        self.alg = alg
        self.n = n
        self._terms: Dict[Key, Fraction] = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    # -- access -------------------------------------------------------------
    def items(self) -> List[Tuple[Key, Fraction]]:
        return sorted(self._terms.items())

    @property
    def terms(self) -> Dict[Key, Fraction]:
        return dict(self._terms)

    def coefficient(self, key: Key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other: "WreathElement") -> None:
        if other.n != self.n or other.alg is not self.alg:
            raise RankMismatch(f"cannot combine elements of A_{self.n} and A_{other.n}")

    def __add__(self, other: "WreathElement") -> "WreathElement":
        self._check(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            add_into(out, k, v)
        return WreathElement(self.alg, self.n, out)

    def __neg__(self) -> "WreathElement":
        return WreathElement(self.alg, self.n, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "WreathElement") -> "WreathElement":
        return self + (-other)

    def scale(self, c) -> "WreathElement":
        c = Fraction(c)
        return WreathElement(self.alg, self.n, {k: c * v for k, v in self._terms.items()})

    def __rmul__(self, c) -> "WreathElement":
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, WreathElement):
            return self.scale(other)
        self._check(other)
        out: Dict[Key, Fraction] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                for k, c in mul_keys(self.alg, k1, k2):
                    add_into(out, k, c1 * c2 * c)
        return WreathElement(self.alg, self.n, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WreathElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    # -- grading ------------------------------------------------------------
    def grading(self) -> Tuple[int, int]:
        keys = {(tensor_degree(self.alg, t), tensor_parity(self.alg, t)) for t, _ in self._terms}
        if len(keys) > 1:
            raise NotHomogeneous(f"element of A_{self.n} is not homogeneous")
        return keys.pop() if keys else (0, 0)

    def parity(self) -> int:
        return self.grading()[1]

    # -- structure maps -----------------------------------------------------
    def embed(self, k: int = 1) -> "WreathElement":
        """A_n -> A_{n+k}: b -> b (x) 1^{(x)k}, perms fixing the new points."""
        ones = expand_factors(self.alg, [self.alg.unit] * k)
        out: Dict[Key, Fraction] = {}
        for (t, p), c in self._terms.items():
            for tail, c2 in ones.items():
                add_into(out, (t + tail, extend(p, self.n + k)), c * c2)
        return WreathElement(self.alg, self.n + k, out)

    def shift(self, k: int) -> "WreathElement":
        """A_m -> A_{k+m}: b -> 1^{(x)k} (x) b."""
        ones = expand_factors(self.alg, [self.alg.unit] * k)
        out: Dict[Key, Fraction] = {}
        for (t, p), c in self._terms.items():
            for head, c2 in ones.items():
                add_into(out, (head + t, shift_perm(p, k)), c * c2)
        return WreathElement(self.alg, self.n + k, out)

    def nakayama(self) -> "WreathElement":
        return nakayama_n(self)

    def trace(self) -> Fraction:
        return trace_n(self)

    def __repr__(self) -> str:
        return f"WreathElement(n={self.n}, {self.format()})"

    def format(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (t, p), c in self.items():
            tensor = "(x)".join(self.alg.labels[i] for i in t) or "1"
            perm = "" if p == identity_perm(self.n) else f"[{''.join(map(str, p))}]"
            parts.append(f"{c}*{tensor}{perm}")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def zero(alg: FrobeniusAlgebra, n: int) -> WreathElement:
    return WreathElement(alg, n)


def from_factors(alg: FrobeniusAlgebra, factors: Sequence[Vector], perm: Optional[Perm] = None) -> WreathElement:
    n = len(factors)
    p = tuple(perm) if perm is not None else identity_perm(n)
    return WreathElement(alg, n, {(t, p): c for t, c in expand_factors(alg, factors).items()})


def one(alg: FrobeniusAlgebra, n: int) -> WreathElement:
    return from_factors(alg, [alg.unit] * n)


def from_key(alg: FrobeniusAlgebra, tensor: Tensor, perm: Perm, coeff=1) -> WreathElement:
    return WreathElement(alg, len(perm), {(tuple(tensor), tuple(perm)): Fraction(coeff)})


def from_perm(alg: FrobeniusAlgebra, perm: Perm) -> WreathElement:
    return from_factors(alg, [alg.unit] * len(perm), perm)


def dot(alg: FrobeniusAlgebra, b: Vector, pos: int, n: int) -> WreathElement:
    """1^{(x)(pos-1)} (x) b (x) 1^{(x)(n-pos)}."""
    if not 1 <= pos <= n:
        raise IndexOutOfRange(f"position {pos} outside 1..{n}")
    factors = [alg.unit] * n
    factors[pos - 1] = b
    return from_factors(alg, factors)


def basis_keys(alg: FrobeniusAlgebra, n: int) -> List[Key]:
    size = alg.dim ** n * factorial(n)
    if size > config.SIZE_CAP:
        raise SizeLimit(f"A_{n} over {alg.name} has dimension {size} > HEISCAT_SIZE_CAP={config.SIZE_CAP}")
    tensors = itertools.product(range(alg.dim), repeat=n)
    return [(t, p) for t in tensors for p in all_perms(n)]


# ---------------------------------------------------------------------------
# Trace, Nakayama, Jucys-Murphy
# ---------------------------------------------------------------------------

def multiply(a: WreathElement, b: WreathElement) -> WreathElement:
    return a * b


def trace_n(a: WreathElement) -> Fraction:
    """tr_B^{(x)n} (x) tr_{S_n}: plain product of factor traces on tau = 1."""
    ident = identity_perm(a.n)
    total = Fraction(0)
    for (t, p), c in a.items():
        if p != ident:
            continue
        value = c
        for i in t:
            value *= a.alg.trace_basis(i)
            if not value:
                break
        total += value
    return total


def nakayama_n(a: WreathElement) -> WreathElement:
    alg = a.alg
    out: Dict[Key, Fraction] = {}
    for (t, p), c in a.items():
        sign = -1 if alg.sigma and length(p) % 2 else 1
        for img, c2 in expand_factors(alg, [alg.nakayama_table[i] for i in t]).items():
            add_into(out, (img, p), sign * c * c2)
    return WreathElement(alg, a.n, out)


def _dual_sign(alg: FrobeniusAlgebra, b: int) -> int:
    """(-1)^{sigma * parity(b^v)}."""
    return -1 if alg.sigma and (alg.parities[b] + alg.sigma) % 2 else 1


def t_elem(alg: FrobeniusAlgebra, i: int, j: int, n: int) -> WreathElement:
    """sum_b (-1)^{sigma |b^v|} (b^v in slot i, b in slot j) (i, j) in A_n."""
    if not 1 <= i < j <= n:
        raise IndexOutOfRange(f"t_{{{i},{j}}} needs 1 <= i < j <= {n}")
    total = zero(alg, n)
    perm = transposition(i, j, n)
    for b in range(alg.dim):
        factors = [alg.unit] * n
        factors[i - 1] = alg.dual_basis[b]
        factors[j - 1] = {b: Fraction(1)}
        total = total + from_factors(alg, factors, perm).scale(_dual_sign(alg, b))
    return total


def jucys_murphy(alg: FrobeniusAlgebra, n: int) -> WreathElement:
    """J_n in A_{n+1}; zero for n <= 0."""
    if n <= 0:
        return zero(alg, max(n, 0) + 1)
    total = zero(alg, n + 1)
    for i in range(1, n + 1):
        total = total + t_elem(alg, i, n + 1, n + 1)
    return total


# ---------------------------------------------------------------------------
# Idempotents
# ---------------------------------------------------------------------------

ROW, COLUMN = "row", "column"


def check_idempotent(alg: FrobeniusAlgebra, f: Vector) -> None:
    if alg.mul(f, f) != f:
        raise NotIdempotent(f"{alg.format(f)} is not idempotent")
    if f and alg.grading(f) != (0, 0):
        raise NotDegreeZero(f"{alg.format(f)} does not have degree (0, 0)")


@lru_cache(maxsize=None)
def _symmetrizer(alg: FrobeniusAlgebra, f_items: Tuple[Tuple[int, Fraction], ...], shape: str, n: int) -> WreathElement:
    f = dict(f_items)
    check_idempotent(alg, f)
    box = from_factors(alg, [f] * n)
    avg: Dict[Key, Fraction] = {}
    ones = expand_factors(alg, [alg.unit] * n)
    scale = Fraction(1, factorial(n))
    for p in all_perms(n):
        sign = -1 if shape == COLUMN and length(p) % 2 else 1
        for t, c in ones.items():
            add_into(avg, (t, p), sign * scale * c)
    return box * WreathElement(alg, n, avg)


def symmetrizer_idempotent(alg: FrobeniusAlgebra, f: Vector, shape: str, n: int) -> WreathElement:
    """e_{f,(n)} (row) or e_{f,(1^n)} (column) in A_n."""
    if shape not in (ROW, COLUMN):
        raise ValueError(f"shape must be {ROW!r} or {COLUMN!r}")
    return _symmetrizer(alg, tuple(sorted(f.items())), shape, n)


# ---------------------------------------------------------------------------
# Frobenius extension A_n in A_{n+1}
# ---------------------------------------------------------------------------

def extension_trace(a: WreathElement) -> WreathElement:
    """A_{n+1} -> A_n, (b_1..b_{n+1}) tau -> (-1)^{sigma(|b_1|+..+|b_n|)} tr(b_{n+1}) (b_1..b_n) tau."""
    alg, n = a.alg, a.n - 1
    out: Dict[Key, Fraction] = {}
    for (t, p), c in a.items():
        if p[n] != n + 1:
            continue
        tr = alg.trace_basis(t[n])
        if not tr:
            continue
        sign = -1 if alg.sigma and tensor_parity(alg, t[:n]) else 1
        add_into(out, (t[:n], p[:n]), sign * tr * c)
    return WreathElement(alg, n, out)


def frobext_dual_sets(alg: FrobeniusAlgebra, n: int):
    """x_{b,i} = (1^n (x) b) s_n..s_i and y_{b,i} = s_i..s_n (1^n (x) b^v), i = 1..n+1."""
    xs, ys = [], []
    for b in range(alg.dim):
        tail = dot(alg, {b: Fraction(1)}, n + 1, n + 1)
        tail_dual = dot(alg, alg.dual_basis[b], n + 1, n + 1)
        for i in range(1, n + 2):
            down = from_perm(alg, chain(range(n, i - 1, -1), n + 1))
            up = from_perm(alg, chain(range(i, n + 1), n + 1))
            xs.append(((b, i), tail * down))
            ys.append(((b, i), up * tail_dual))
    return xs, ys


def right_decompose(alg: FrobeniusAlgebra, key: Key) -> Tuple[int, Tuple[int, int], Key]:
    """Write a basis key of A_{l+1} as sign * R_{b,i} (b' (x) 1) tau'.

    R_{b,i} = s_i..s_l (1^l (x) b) runs over a right A_l-basis of A_{l+1}.
    """
    t, p = key
    last = len(p) - 1
    i = p[last]
    b = t[i - 1]
    rest_t = t[:i - 1] + t[i:]
    sign = -1 if alg.parities[b] and tensor_parity(alg, t[:i - 1]) else 1
    c_inv = chain(range(last, i - 1, -1), last + 1)
    rest_p = compose(c_inv, p)
    return sign, (b, i), (rest_t, rest_p[:last])


def right_generator(alg: FrobeniusAlgebra, b: int, i: int, r: int) -> WreathElement:
    """R_{b,i} = s_i o ... o s_r (1^r (x) b) in A_{r+1}."""
    return from_perm(alg, chain(range(i, r + 1), r + 1)) * dot(alg, {b: Fraction(1)}, r + 1, r + 1)


def free_basis_rank(alg: FrobeniusAlgebra, n: int, side: str = "left") -> Tuple[int, int]:
    """Rank of span{a x_{b,i}} (left) or span{y_{b,i} a} (right) inside A_{n+1}, and dim A_{n+1}."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    xs, ys = frobext_dual_sets(alg, n)
    columns = {k: j for j, k in enumerate(basis_keys(alg, n + 1))}
    rows = []
    for key in basis_keys(alg, n):
        a = WreathElement(alg, n, {key: Fraction(1)}).embed()
        for (_, x), (_, y) in zip(xs, ys):
            prod = a * x if side == "left" else y * a
            rows.append({columns[k]: c for k, c in prod.items()})
    rank = rank_of_rows(rows, len(columns))
    log.debug("%s free basis check n=%d over %s: rank %d of %d", side, n, alg.name, rank, len(columns))
    return rank, len(columns)
