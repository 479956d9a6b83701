"""Explicit bimodules: a basis plus action matrices for generators.

These are the slow, literal constructions (regular bimodules and quotient
tensor products) used to cross-check the normal form in ``words``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from heiscat import config
from heiscat.algebra import wreath
from heiscat.algebra.frobenius import FrobeniusAlgebra, add_into
from heiscat.algebra.linalg import reduce_against, rref_rows
from heiscat.bimodule.maps import algebra_generators
from heiscat.errors import NotHomogeneous, NotIntertwining, RankMismatch, SizeLimit

log = logging.getLogger(__name__)

Column = Dict[int, Fraction]
# generator index -> column j -> image of basis vector j
Action = List[List[Column]]


@dataclass
class ExplicitBimodule:
    alg: FrobeniusAlgebra
    left_rank: int
    right_rank: int
    basis: List[object]
    degrees: List[Tuple[int, int]]
    left_action: Action = field(default_factory=list)
    right_action: Action = field(default_factory=list)
    shift: Tuple[int, int] = (0, 0)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def act_left(self, g: int, vec: Column) -> Column:
        return _apply(self.left_action[g], vec)

    def act_right(self, vec: Column, g: int) -> Column:
        return _apply(self.right_action[g], vec)

    def validate(self) -> None:
        """Actions commute and respect degrees."""
        left_gens = algebra_generators(self.alg, self.left_rank)
        right_gens = algebra_generators(self.alg, self.right_rank)
        for g, col_images in enumerate(self.left_action):
            _check_degrees(self, col_images, left_gens[g].grading())
        for h, col_images in enumerate(self.right_action):
            _check_degrees(self, col_images, right_gens[h].grading())
        for g in range(len(self.left_action)):
            for h in range(len(self.right_action)):
                for j in range(self.dim):
                    e = {j: Fraction(1)}
                    if self.act_right(self.act_left(g, e), h) != self.act_left(g, self.act_right(e, h)):
                        raise NotIntertwining(f"left generator {g} and right generator {h} do not commute")


def _apply(columns: List[Column], vec: Column) -> Column:
    out: Column = {}
    for j, c in vec.items():
        for i, v in columns[j].items():
            add_into(out, i, c * v)
    return out


def _check_degrees(M: ExplicitBimodule, columns: List[Column], grading: Tuple[int, int]) -> None:
    d, eps = grading
    for j, image in enumerate(columns):
        deg, par = M.degrees[j]
        for i in image:
            if M.degrees[i] != (deg + d, (par + eps) % 2):
                raise NotHomogeneous(f"action moves basis vector {j} out of its graded piece")


def _grading(alg: FrobeniusAlgebra, key) -> Tuple[int, int]:
    return wreath.tensor_degree(alg, key[0]), wreath.tensor_parity(alg, key[0])


def regular_bimodule(alg: FrobeniusAlgebra, letter: str, k: int) -> ExplicitBimodule:
    """P -> (A_{k+1}, A_k) on A_{k+1}; Q -> (A_{k-1}, A_k) on A_k; unit -> (A_k, A_k)."""
    if letter == "P":
        top, left, right = k + 1, k + 1, k
    elif letter == "Q":
        top, left, right = k, k - 1, k
    elif letter == "unit":
        top, left, right = k, k, k
    else:
        raise ValueError(f"unknown letter {letter!r}")
    if min(left, right) < 0:
        return ExplicitBimodule(alg, max(left, 0), max(right, 0), [], [])
    keys = wreath.basis_keys(alg, top)
    index = {key: j for j, key in enumerate(keys)}

    def columns(elem, side: str) -> List[Column]:
        cols = []
        for key in keys:
            x = wreath.WreathElement(alg, top, {key: Fraction(1)})
            y = elem * x if side == "left" else x * elem
            cols.append({index[kk]: c for kk, c in y.items()})
        return cols

    lefts = [columns(g.embed(top - left), "left") for g in algebra_generators(alg, left)]
    rights = [columns(g.embed(top - right), "right") for g in algebra_generators(alg, right)]
    return ExplicitBimodule(alg, left, right, list(keys), [_grading(alg, key) for key in keys], lefts, rights)


def tensor_over(left: ExplicitBimodule, right: ExplicitBimodule) -> ExplicitBimodule:
    """left (x)_{A_k} right as the quotient by m a (x) v - m (x) a v."""
    if left.right_rank != right.left_rank:
        raise RankMismatch(f"A_{left.right_rank} and A_{right.left_rank} differ")
    alg = left.alg
    size = left.dim * right.dim
    if size > config.SIZE_CAP:
        raise SizeLimit(f"tensor product of dimension {size} > HEISCAT_SIZE_CAP={config.SIZE_CAP}")

    def pair(i: int, j: int) -> int:
        return i * right.dim + j

    def lift(u: Column, v: Column) -> Column:
        out: Column = {}
        for i, a in u.items():
            for j, b in v.items():
                add_into(out, pair(i, j), a * b)
        return out

    relations: List[Column] = []
    for g in range(len(left.right_action)):
        for i in range(left.dim):
            mi = left.act_right({i: Fraction(1)}, g)
            for j in range(right.dim):
                row = lift(mi, {j: Fraction(1)})
                for k, c in lift({i: Fraction(1)}, right.act_left(g, {j: Fraction(1)})).items():
                    add_into(row, k, -c)
                if row:
                    relations.append(row)
    reduced, pivots = rref_rows(relations, size)
    pivot_set = set(pivots)
    free = [c for c in range(size) if c not in pivot_set]
    position = {c: idx for idx, c in enumerate(free)}

    def project(vec: Column) -> Column:
        rest = reduce_against(vec, reduced, pivots)
        return {position[c]: v for c, v in rest.items() if c in position}

    def quotient_action(n_gens: int, act) -> Action:
        out: Action = []
        for g in range(n_gens):
            cols = []
            for c in free:
                i, j = divmod(c, right.dim)
                cols.append(project(act(g, i, j)))
            out.append(cols)
        return out

    lefts = quotient_action(len(left.left_action),
                            lambda g, i, j: lift(left.act_left(g, {i: Fraction(1)}), {j: Fraction(1)}))
    rights = quotient_action(len(right.right_action),
                             lambda g, i, j: lift({i: Fraction(1)}, right.act_right({j: Fraction(1)}, g)))
    basis = [(left.basis[c // right.dim], right.basis[c % right.dim]) for c in free]
    degrees = []
    for c in free:
        (d1, p1), (d2, p2) = left.degrees[c // right.dim], right.degrees[c % right.dim]
        degrees.append((d1 + d2, (p1 + p2) % 2))
    shift = (left.shift[0] + right.shift[0], (left.shift[1] + right.shift[1]) % 2)
    log.debug("tensor_over: %d x %d -> %d", left.dim, right.dim, len(free))
    return ExplicitBimodule(alg, left.left_rank, right.right_rank, basis, degrees, lefts, rights, shift)
