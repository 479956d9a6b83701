"""
Graded Frobenius superalgebras
==============================
``validate`` turns an AlgebraSpec (basis, structure constants, trace) into a
FrobeniusAlgebra with its dual basis, Nakayama automorphism psi and trace
degree (-delta, sigma).  Every invariant is checked on construction; a spec
that fails one raises the matching error from heiscat.errors naming the
offending basis indices.

Linear algebra
--------------
    G[k][l]   = tr(b_k b_l)                       (Gram matrix)
    b_l^v     = sum_m D[l][m] b_m,   D = (G^-1)^T (dual basis)
    psi(b_k)  = sum_m X[k][m] b_m,   X[k] = G^-1 r,  r_l = (-1)^(|k||l|) G[k][l]

Elements of B are sparse coordinate vectors ``{basis index: Fraction}``.

Usage
-----
    from heiscat.algebra.frobenius import builtin

    B = builtin("clifford")
    B.delta, B.sigma           # (0, 1)
    B.dual({0: 1})             # {1: Fraction(1, 1)}   1^v = c
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from heiscat.algebra.coeff import GradedSuperVectorSpace
from heiscat.algebra.linalg import invert, rank_of_rows
from heiscat.errors import (
    GradingViolation,
    InvariantViolation,
    MalformedSpec,
    NotAssociative,
    NotHomogeneous,
    NotUnital,
    TraceDegenerate,
    TraceNotHomogeneous,
    UnknownBuiltin,
)

log = logging.getLogger(__name__)

Vector = Dict[int, Fraction]


# ---------------------------------------------------------------------------
# Sparse vector helpers
# ---------------------------------------------------------------------------

def add_into(target: Dict, key, value: Fraction) -> None:
    """target[key] += value, dropping the entry when it cancels."""
    new = target.get(key, Fraction(0)) + value
    if new:
        target[key] = new
    else:
        target.pop(key, None)


def combine(*pairs: Tuple[Fraction, Mapping]) -> Dict:
    """sum_i c_i * v_i for sparse dicts with arbitrary hashable keys."""
    out: Dict = {}
    for c, vec in pairs:
        if not c:
            continue
        for k, v in vec.items():
            add_into(out, k, c * v)
    return out


# ---------------------------------------------------------------------------
# Spec
# ---------------------------------------------------------------------------

@dataclass
class AlgebraSpec:
    """Raw description of B as read from a spec file or a builtin."""
    name: str
    basis: List[Tuple[str, int, int]]                    # (label, degree, parity)
    unit: Vector
    mult: Dict[Tuple[int, int], Vector]
    trace: Vector
    flags: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_tree(cls, tree: Mapping[str, Any]) -> "AlgebraSpec":
        """Build a spec from the parsed spec-file tree.

        Coordinates are ``[k, num, den]`` triples; ``mult`` entries are
        ``[i, j, [[k, num, den], ...]]``.
        """
        try:
            basis = [(str(lab), int(deg), int(par)) for lab, deg, par in tree["basis"]]
            mult: Dict[Tuple[int, int], Vector] = {}
            for i, j, coords in tree.get("mult", []):
                mult[(int(i), int(j))] = _coords(coords)
            return cls(
                name=str(tree.get("name", "custom")),
                basis=basis,
                unit=_coords(tree["unit"]),
                mult=mult,
                trace=_coords(tree["trace"]),
                flags=dict(tree.get("flags", {})),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedSpec(f"cannot read algebra spec: {exc}") from exc

    def to_tree(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "basis": [list(b) for b in self.basis],
            "unit": _uncoords(self.unit),
            "mult": [[i, j, _uncoords(v)] for (i, j), v in sorted(self.mult.items()) if v],
            "trace": _uncoords(self.trace),
            "flags": dict(self.flags),
        }


def _coords(coords) -> Vector:
    out: Vector = {}
    for entry in coords:
        k, num = int(entry[0]), int(entry[1])
        den = int(entry[2]) if len(entry) > 2 else 1
        if den == 0:
            raise ValueError("zero denominator")
        add_into(out, k, Fraction(num, den))
    return out


def _uncoords(vec: Vector) -> List[List[int]]:
    return [[k, v.numerator, v.denominator] for k, v in sorted(vec.items())]


# ---------------------------------------------------------------------------
# Validated algebra
# ---------------------------------------------------------------------------

class FrobeniusAlgebra:
    """A validated graded Frobenius superalgebra.  Build through ``validate``."""

    def __init__(self, spec: AlgebraSpec, dual_matrix, nakayama_matrix, delta: int, sigma: int):
        self.spec = spec
        self.name = spec.name
        self.dim = len(spec.basis)
        self.labels: List[str] = [b[0] for b in spec.basis]
        self.degrees: List[int] = [b[1] for b in spec.basis]
        self.parities: List[int] = [b[2] % 2 for b in spec.basis]
        self.delta = delta
        self.sigma = sigma
        self.unit: Vector = dict(spec.unit)
        self._table: Dict[Tuple[int, int], Vector] = {k: dict(v) for k, v in spec.mult.items() if v}
        self._trace: Vector = dict(spec.trace)
        self.dual_basis: List[Vector] = [_row_vector(r) for r in dual_matrix]
        self.nakayama_table: List[Vector] = [_row_vector(r) for r in nakayama_matrix]
        self._nakayama_inverse: Optional[List[Vector]] = None
        self.unit_index: Optional[int] = _single_index(self.unit)

    def __repr__(self) -> str:
        return f"FrobeniusAlgebra({self.name!r}, dim={self.dim}, delta={self.delta}, sigma={self.sigma})"

    # -- basis data ---------------------------------------------------------
    def basis_vector(self, i: int) -> Vector:
        return {i: Fraction(1)}

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label {label!r} in {self.name}") from None

    def grading(self, vec: Vector) -> Tuple[int, int]:
        """(degree, parity) of a nonzero homogeneous element."""
        keys = {(self.degrees[i], self.parities[i]) for i in vec}
        if len(keys) != 1:
            raise NotHomogeneous(f"element {self.format(vec)} is not homogeneous")
        return keys.pop()

    def parity(self, vec: Vector) -> int:
        return self.grading(vec)[1]

    def graded_space(self) -> GradedSuperVectorSpace:
        return GradedSuperVectorSpace.from_basis(zip(self.degrees, self.parities))

    # -- multiplication / trace --------------------------------------------
    def mul_basis(self, i: int, j: int) -> Vector:
        return self._table.get((i, j), {})

    def mul(self, u: Vector, v: Vector) -> Vector:
        out: Vector = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.mul_basis(i, j).items():
                    add_into(out, k, a * b * c)
        return out

    def trace(self, u: Vector) -> Fraction:
        return sum((c * self._trace.get(i, Fraction(0)) for i, c in u.items()), Fraction(0))

    def trace_basis(self, i: int) -> Fraction:
        return self._trace.get(i, Fraction(0))

    # -- duals / Nakayama ---------------------------------------------------
    def dual(self, u: Vector) -> Vector:
        return combine(*((c, self.dual_basis[i]) for i, c in u.items()))

    def double_dual_basis(self) -> List[Vector]:
        """Dual basis of the dual basis: (b_k^v)^v with tr(b_j^v (b_k^v)^v) = delta_jk."""
        gram = [[self.trace(self.mul(self.dual_basis[j], {c: Fraction(1)})) for c in range(self.dim)]
                for j in range(self.dim)]
        inv = invert(gram)
        return [_row_vector([inv[c][k] for c in range(self.dim)]) for k in range(self.dim)]

    def nakayama(self, u: Vector) -> Vector:
        return combine(*((c, self.nakayama_table[i]) for i, c in u.items()))

    def nakayama_inverse(self, u: Vector) -> Vector:
        if self._nakayama_inverse is None:
            dense = [[r.get(j, Fraction(0)) for j in range(self.dim)] for r in self.nakayama_table]
            self._nakayama_inverse = [_row_vector(r) for r in invert(dense)]
        return combine(*((c, self._nakayama_inverse[i]) for i, c in u.items()))

    def nakayama_power(self, u: Vector, k: int) -> Vector:
        step = self.nakayama if k >= 0 else self.nakayama_inverse
        for _ in range(abs(k)):
            u = step(u)
        return u

    def is_supersymmetric(self) -> bool:
        for a in range(self.dim):
            for b in range(self.dim):
                sign = -1 if self.parities[a] and self.parities[b] else 1
                lhs = self.trace(self.mul_basis(a, b))
                rhs = sign * self.trace(self.mul_basis(b, a))
                if lhs != rhs:
                    return False
        return True

    def nakayama_is_identity(self) -> bool:
        return all(self.nakayama_table[i] == {i: Fraction(1)} for i in range(self.dim))

    # -- idempotent slices --------------------------------------------------
    def idempotent_slice(self, f: Vector, g: Vector) -> GradedSuperVectorSpace:
        """Graded dimension of f B g for degree-(0,0) idempotents f, g."""
        images: Dict[Tuple[int, int], List[Vector]] = {}
        for i in range(self.dim):
            img = self.mul(self.mul(f, {i: Fraction(1)}), g)
            if img:
                images.setdefault((self.degrees[i], self.parities[i]), []).append(img)
        dims = {key: rank_of_rows(rows, self.dim) for key, rows in images.items()}
        return GradedSuperVectorSpace(dims)

    # -- text I/O -----------------------------------------------------------
    def format(self, u: Vector) -> str:
        if not u:
            return "0"
        parts = []
        for i, c in sorted(u.items()):
            lab = self.labels[i]
            parts.append(lab if c == 1 else (f"-{lab}" if c == -1 else f"{c}*{lab}"))
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def parse_element(self, text: str) -> Vector:
        """Parse ``"e1 + e2"``, ``"-c"``, ``"1/2*x"``, or a bare label."""
        out: Vector = {}
        cleaned = text.replace(" ", "")
        if not cleaned:
            raise ValueError("empty element")
        for sign, term in re.findall(r"([+-]?)([^+-]+)", cleaned):
            coeff = Fraction(-1 if sign == "-" else 1)
            if term in self.labels:
                label = term
            elif "*" in term:
                num, label = term.split("*", 1)
                coeff *= Fraction(num)
            else:
                raise KeyError(f"unknown basis label {term!r} in {self.name}")
            add_into(out, self.index_of(label), coeff)
        return out


def _row_vector(row: Sequence[Fraction]) -> Vector:
    return {j: Fraction(v) for j, v in enumerate(row) if v != 0}


def _single_index(vec: Vector) -> Optional[int]:
    if len(vec) == 1:
        (i, c), = vec.items()
        if c == 1:
            return i
    return None


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def validate(spec: AlgebraSpec) -> FrobeniusAlgebra:
    """Check every invariant of ``spec`` and return the enriched algebra."""
    _check_well_formed(spec)
    dim = len(spec.basis)
    degrees = [b[1] for b in spec.basis]
    parities = [b[2] % 2 for b in spec.basis]
    table = {k: v for k, v in spec.mult.items() if v}

    def mul(u: Vector, v: Vector) -> Vector:
        out: Vector = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in table.get((i, j), {}).items():
                    add_into(out, k, a * b * c)
        return out

    for (i, j), vec in table.items():
        for k in vec:
            if degrees[k] != degrees[i] + degrees[j] or parities[k] != (parities[i] + parities[j]) % 2:
                raise GradingViolation("product leaves the graded component", [i, j, k])

    for i in range(dim):
        e = {i: Fraction(1)}
        if mul(spec.unit, e) != e or mul(e, spec.unit) != e:
            raise NotUnital("unit does not act as identity", [i])

    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                ek = {k: Fraction(1)}
                left = mul(table.get((i, j), {}), ek)
                right = mul({i: Fraction(1)}, table.get((j, k), {}))
                if left != right:
                    raise NotAssociative("(b_i b_j) b_k != b_i (b_j b_k)", [i, j, k])

    support = [i for i, c in spec.trace.items() if c != 0]
    if not support:
        raise TraceDegenerate("trace is identically zero")
    gradings = {(degrees[i], parities[i]) for i in support}
    if len(gradings) != 1:
        raise TraceNotHomogeneous("trace is nonzero in several degrees", sorted(support))
    delta, sigma = gradings.pop()

    def tr(u: Vector) -> Fraction:
        return sum((c * spec.trace.get(i, Fraction(0)) for i, c in u.items()), Fraction(0))

    gram = [[tr(table.get((k, j), {})) for j in range(dim)] for k in range(dim)]
    try:
        gram_inv = invert(gram)
    except ValueError:
        raise TraceDegenerate("Gram matrix tr(b_k b_l) is singular", list(range(dim))) from None

    dual_matrix = [[gram_inv[m][j] for m in range(dim)] for j in range(dim)]
    nakayama_matrix = []
    for k in range(dim):
        r = [(-1 if parities[k] and parities[j] else 1) * gram[k][j] for j in range(dim)]
        nakayama_matrix.append([sum((gram_inv[m][j] * r[j] for j in range(dim)), Fraction(0)) for m in range(dim)])

    alg = FrobeniusAlgebra(spec, dual_matrix, nakayama_matrix, delta, sigma)
    check_invariants(alg)
    log.debug("validated %r", alg)
    return alg


def _check_well_formed(spec: AlgebraSpec) -> None:
    if not spec.basis:
        raise MalformedSpec("basis is empty")
    labels = [b[0] for b in spec.basis]
    dupes = sorted({i for i, lab in enumerate(labels) if labels.count(lab) > 1})
    if dupes:
        raise MalformedSpec("basis labels are not unique", dupes)
    dim = len(spec.basis)
    for i, (_, deg, par) in enumerate(spec.basis):
        if deg < 0 or par not in (0, 1):
            raise MalformedSpec("degree must be >= 0 and parity 0 or 1", [i])
    for (i, j), vec in spec.mult.items():
        if not (0 <= i < dim and 0 <= j < dim) or any(not 0 <= k < dim for k in vec):
            raise MalformedSpec("structure constant refers to a missing basis vector", [i, j])
    if any(not 0 <= k < dim for k in list(spec.unit) + list(spec.trace)):
        raise MalformedSpec("unit or trace refers to a missing basis vector")


def check_invariants(alg: FrobeniusAlgebra) -> None:
    """Assert the derived-table laws; raises InvariantViolation on failure."""
    dim, sigma = alg.dim, alg.sigma
    e = [{i: Fraction(1)} for i in range(dim)]
    par = alg.parities

    for k in range(dim):
        for j in range(dim):
            expected = Fraction(1 if k == j else 0)
            if alg.trace(alg.mul(e[k], alg.dual_basis[j])) != expected:
                raise InvariantViolation("dual basis law tr(b_k b_l^v) = delta_kl fails", [k, j])

    for b in range(dim):
        left = combine(*((alg.trace(alg.mul(e[b], alg.dual_basis[c])), e[c]) for c in range(dim)))
        right = combine(*((alg.trace(alg.mul(e[c], e[b])), alg.dual_basis[c]) for c in range(dim)))
        if left != e[b] or right != e[b]:
            raise InvariantViolation("decomposition law sum_c tr(b c^v) c = b fails", [b])

    for a in range(dim):
        for b in range(dim):
            sign = -1 if par[a] and par[b] else 1
            if alg.trace(alg.mul(e[a], e[b])) != sign * alg.trace(alg.mul(e[b], alg.nakayama(e[a]))):
                raise InvariantViolation("Nakayama law fails", [a, b])

    for a in range(dim):
        img = alg.nakayama(e[a])
        if img and alg.grading(img) != (alg.degrees[a], par[a]):
            raise InvariantViolation("Nakayama map does not preserve degree", [a])
        for b in range(dim):
            if alg.nakayama(alg.mul(e[a], e[b])) != alg.mul(img, alg.nakayama(e[b])):
                raise InvariantViolation("Nakayama map is not multiplicative", [a, b])

    double = alg.double_dual_basis()
    for f in range(dim):
        sign = -1 if (sigma * par[f] + par[f]) % 2 else 1
        if double[f] != combine((Fraction(sign), alg.nakayama(e[f]))):
            raise InvariantViolation("double-dual law fails", [f])

    lhs: Dict[Tuple[int, int], Fraction] = {}
    rhs: Dict[Tuple[int, int], Fraction] = {}
    for b in range(dim):
        for j, c in alg.dual_basis[b].items():
            add_into(lhs, (b, j), c)
        sign = -1 if (sigma * par[b] + par[b]) % 2 else 1
        for i, c1 in alg.dual_basis[b].items():
            for j, c2 in alg.nakayama(e[b]).items():
                add_into(rhs, (i, j), sign * c1 * c2)
    if lhs != rhs:
        raise InvariantViolation("Casimir element depends on the basis")

    declared = alg.spec.flags
    if "delta" in declared and int(declared["delta"]) != alg.delta:
        raise InvariantViolation(f"declared delta={declared['delta']} but trace gives {alg.delta}")
    if "sigma" in declared and int(declared["sigma"]) != alg.sigma:
        raise InvariantViolation(f"declared sigma={declared['sigma']} but trace gives {alg.sigma}")
    if declared.get("psi_identity") is not None and bool(declared["psi_identity"]) != alg.nakayama_is_identity():
        raise InvariantViolation("declared Nakayama automorphism disagrees with the computed one")


# ---------------------------------------------------------------------------
# Builtins
# ---------------------------------------------------------------------------

BUILTIN_NAMES = ("trivial", "clifford", "dual_numbers", "truncated_poly_k", "exterior_line", "zigzag_a2")

# Default idempotent families used by the Heisenberg layer, by label.
BUILTIN_IDEMPOTENTS = {"zigzag_a2": ["e1", "e2"]}


def _one(k: int) -> Vector:
    return {k: Fraction(1)}


def _truncated_poly(k: int) -> AlgebraSpec:
    labels = ["1", "x"] + [f"x^{i}" for i in range(2, k)]
    basis = [(labels[i], i, 0) for i in range(k)]
    mult = {(i, j): _one(i + j) for i in range(k) for j in range(k) if i + j < k}
    return AlgebraSpec(f"truncated_poly_{k}", basis, _one(0), mult, _one(k - 1))


def _builtin_spec(name: str) -> AlgebraSpec:
    if name == "trivial":
        return AlgebraSpec("trivial", [("1", 0, 0)], _one(0), {(0, 0): _one(0)}, _one(0))
    if name == "clifford":
        mult = {(0, 0): _one(0), (0, 1): _one(1), (1, 0): _one(1), (1, 1): _one(0)}
        return AlgebraSpec("clifford", [("1", 0, 0), ("c", 0, 1)], _one(0), mult, _one(1))
    if name == "dual_numbers":
        mult = {(0, 0): _one(0), (0, 1): _one(1), (1, 0): _one(1)}
        return AlgebraSpec("dual_numbers", [("1", 0, 0), ("x", 1, 0)], _one(0), mult, _one(1))
    if name == "exterior_line":
        mult = {(0, 0): _one(0), (0, 1): _one(1), (1, 0): _one(1)}
        return AlgebraSpec("exterior_line", [("1", 0, 0), ("xi", 1, 1)], _one(0), mult, _one(1))
    if name == "zigzag_a2":
        e1, e2, a12, a21, w1, w2 = range(6)
        basis = [("e1", 0, 0), ("e2", 0, 0), ("a12", 1, 0), ("a21", 1, 0), ("w1", 2, 0), ("w2", 2, 0)]
        mult = {
            (e1, e1): _one(e1), (e2, e2): _one(e2),
            (e1, a12): _one(a12), (a12, e2): _one(a12),
            (e2, a21): _one(a21), (a21, e1): _one(a21),
            (a12, a21): _one(w1), (a21, a12): _one(w2),
            (e1, w1): _one(w1), (w1, e1): _one(w1),
            (e2, w2): _one(w2), (w2, e2): _one(w2),
        }
        unit = {e1: Fraction(1), e2: Fraction(1)}
        trace = {w1: Fraction(1), w2: Fraction(1)}
        return AlgebraSpec("zigzag_a2", basis, unit, mult, trace)
    match = re.fullmatch(r"truncated_poly_(\d+|k)", name)
    if match:
        k = 3 if match.group(1) == "k" else int(match.group(1))
        if k >= 1:
            return _truncated_poly(k)
    raise UnknownBuiltin(f"no builtin algebra named {name!r}; known: {', '.join(BUILTIN_NAMES)}")


@lru_cache(maxsize=None)
def builtin(name: str) -> FrobeniusAlgebra:
    return validate(_builtin_spec(name))


def dual(alg: FrobeniusAlgebra, b: Vector) -> Vector:
    """Linear extension of b_k -> b_k^v."""
    return alg.dual(b)
