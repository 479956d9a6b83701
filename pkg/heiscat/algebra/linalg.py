"""Exact sparse linear algebra over Q, on top of sympy's SDM matrices.

Rows travel through the library as ``{column: Fraction}`` dicts; this module
is the only place that converts them to and from sympy's QQ domain.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices.sdm import SDM

Row = Dict[int, Fraction]


def to_qq(x: Fraction):
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def from_qq(v) -> Fraction:
    return Fraction(int(v.numerator), int(v.denominator))


def sparse_matrix(rows: Sequence[Row], ncols: int) -> SDM:
    elems = {}
    for i, row in enumerate(rows):
        clean = {j: to_qq(v) for j, v in row.items() if v != 0}
        if clean:
            elems[i] = clean
    return SDM(elems, (len(rows), ncols), QQ)


def rref_rows(rows: Sequence[Row], ncols: int) -> Tuple[List[Row], List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    if not rows or ncols == 0:
        return [], []
    reduced, pivots = sparse_matrix(rows, ncols).rref()
    out: List[Row] = []
    for i in sorted(reduced):
        row = {j: from_qq(v) for j, v in reduced[i].items() if v}
        if row:
            out.append(row)
    return out, list(pivots)


def rank_of_rows(rows: Sequence[Row], ncols: int) -> int:
    return len(rref_rows(rows, ncols)[1])


def invert(matrix: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    """Inverse of a square matrix given densely; raises ValueError if singular."""
    n = len(matrix)
    rows = [{j: Fraction(v) for j, v in enumerate(r) if v != 0} for r in matrix]
    if rank_of_rows(rows, n) != n:
        raise ValueError("matrix is singular")
    inv = sparse_matrix(rows, n).inv()
    dense = [[Fraction(0)] * n for _ in range(n)]
    for i, row in inv.items():
        for j, v in row.items():
            dense[i][j] = from_qq(v)
    return dense


def reduce_against(vector: Row, basis: List[Row], pivots: List[int]) -> Row:
    """Reduce ``vector`` modulo the row space of an RREF (``basis``, ``pivots``)."""
    out = dict(vector)
    for row, p in zip(basis, pivots):
        c = out.get(p)
        if not c:
            continue
        for j, v in row.items():
            val = out.get(j, Fraction(0)) - c * v
            if val:
                out[j] = val
            else:
                out.pop(j, None)
    return out
