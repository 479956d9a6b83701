"""
Pairing values
==============
The structure constants of the Heisenberg relations are graded dimensions of
symmetric or exterior powers of an idempotent slice f B g:

    pairing(alg, f, g, k, SYM) = grdim S^k(f B g)
    pairing(alg, f, g, k, EXT) = grdim Lambda^k(f B g)

``oracle_pairing`` recomputes the same value the long way, as the graded
dimension of e A_k e' for the symmetrizers e, e' of f and g, by exact rank.

Usage
-----
    from heiscat.algebra.frobenius import builtin
    from heiscat.heisenberg.pairing import SYM, oracle_pairing, pairing

    B = builtin("dual_numbers")
    pairing(B, B.unit, B.unit, 2, SYM)          # 1 + q + q^2
    oracle_pairing(B, B.unit, B.unit, 2, SYM)   # same, by brute force
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Tuple

from heiscat.algebra import wreath
from heiscat.algebra.coeff import QPiLaurent, grdim_ext_power, grdim_sym_power
from heiscat.algebra.frobenius import FrobeniusAlgebra, Vector
from heiscat.algebra.linalg import rank_of_rows
from heiscat.algebra.wreath import COLUMN, ROW

log = logging.getLogger(__name__)

SYM, EXT = "sym", "ext"


def _check_shape(shape: str) -> None:
    if shape not in (SYM, EXT):
        raise ValueError(f"shape must be {SYM!r} or {EXT!r}, got {shape!r}")


def pairing(alg: FrobeniusAlgebra, f: Vector, g: Vector, k: int, shape: str = SYM) -> QPiLaurent:
    _check_shape(shape)
    space = alg.idempotent_slice(f, g)
    if shape == SYM:
        return grdim_sym_power(space, k)
    return grdim_ext_power(space, k)


def oracle_pairing(alg: FrobeniusAlgebra, f: Vector, g: Vector, k: int, shape: str = SYM) -> QPiLaurent:
    """grdim of e_{f,(k)} A_k e_{g,(k)} (SYM) or e_{f,(1^k)} A_k e_{g,(k)} (EXT).

    Raises SizeLimit when A_k is too large to enumerate.
    """
    _check_shape(shape)
    if k == 0:
        return QPiLaurent.one()
    left = wreath.symmetrizer_idempotent(alg, f, ROW if shape == SYM else COLUMN, k)
    right = wreath.symmetrizer_idempotent(alg, g, ROW, k)
    keys = wreath.basis_keys(alg, k)
    column = {key: i for i, key in enumerate(keys)}
    pieces: Dict[Tuple[int, int], List[Dict[int, Fraction]]] = {}
    for key in keys:
        image = left * wreath.from_key(alg, *key) * right
        if not image:
            continue
        grading = (wreath.tensor_degree(alg, key[0]), wreath.tensor_parity(alg, key[0]))
        pieces.setdefault(grading, []).append({column[t]: c for t, c in image.items()})
    dims = {grading: rank_of_rows(rows, len(keys)) for grading, rows in pieces.items()}
    log.debug("oracle slice for k=%d on %s: %s", k, alg.name, dims)
    return QPiLaurent({grading: n for grading, n in dims.items()})
