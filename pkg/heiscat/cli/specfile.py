"""
Algebra specs on disk
=====================
``load_algebra`` accepts either a builtin name (``trivial``, ``clifford``,
``truncated_poly_4``, ...) or a path to a JSON spec file:

    {
      "name": "dual_numbers",
      "basis": [["1", 0, 0], ["x", 1, 0]],
      "unit": [[0, 1, 1]],
      "mult": [[0, 0, [[0, 1, 1]]], [0, 1, [[1, 1, 1]]], [1, 0, [[1, 1, 1]]]],
      "trace": [[1, 1, 1]],
      "flags": {"delta": 1, "sigma": 0}
    }

Coordinates are ``[basis index, numerator, denominator]``.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Union

from heiscat.algebra.frobenius import AlgebraSpec, FrobeniusAlgebra, builtin, validate
from heiscat.errors import MalformedSpec

log = logging.getLogger(__name__)


def read_spec(path: Union[str, Path]) -> AlgebraSpec:
    path = Path(path)
    try:
        tree = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise MalformedSpec(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedSpec(f"{path} is not valid JSON: {exc.msg} (line {exc.lineno})") from exc
    if not isinstance(tree, dict):
        raise MalformedSpec(f"{path} must hold a JSON object")
    tree.setdefault("name", path.stem)
    return AlgebraSpec.from_tree(tree)


def load_algebra(name_or_path: str) -> FrobeniusAlgebra:
    """A validated algebra; raises the matching AlgebraError on a bad spec."""
    path = Path(name_or_path)
    if path.suffix == ".json" or path.is_file():
        alg = validate(read_spec(path))
    else:
        alg = builtin(name_or_path)
    log.debug("loaded %r", alg)
    return alg


def write_spec(alg: FrobeniusAlgebra, path: Union[str, Path]) -> Path:
    """Dump the spec of ``alg`` in the same format ``read_spec`` accepts."""
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", encoding="utf-8") as handle:
        json.dump(alg.spec.to_tree(), handle, indent=2)
        handle.write("\n")
    return out
