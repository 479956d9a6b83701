"""
Relation harness
================
Checks that two linear combinations of diagrams have the same image under
F_n for every n in a range.  Agreement is exact: both sides are evaluated to
bimodule maps and compared on every right generator.

Passing means "F-verified" on the labels tried, nothing more.

Usage
-----
    from heiscat.algebra.frobenius import builtin
    from heiscat.diagram import harness
    from heiscat.diagram.relations import CATALOG

    B = builtin("dual_numbers")
    cases = CATALOG["double-crossing-qp"].cases(B)
    results = harness.run_cases(cases, B, (0, 1, 2))
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from joblib import Parallel, delayed

from heiscat import config
from heiscat.algebra.frobenius import FrobeniusAlgebra
from heiscat.diagram import ir
from heiscat.diagram.functor import evaluate_sum
from heiscat.diagram.ir import Combination
from heiscat.diagram.relations import Case, Params
from heiscat.errors import DegreeMismatch, SizeLimit

log = logging.getLogger(__name__)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class LabelResult:
    n: int
    status: str
    detail: Optional[str] = None


@dataclass
class CheckResult:
    relation: str = ""
    params: Params = ()
    labels: List[LabelResult] = field(default_factory=list)
    note: Optional[str] = None
    ref: str = ""

    @property
    def status(self) -> str:
        states = {r.status for r in self.labels}
        if FAIL in states:
            return FAIL
        if PASS in states:
            return PASS
        return SKIPPED

    @property
    def detail(self) -> Optional[str]:
        for r in self.labels:
            if r.status == FAIL:
                return r.detail
        return self.note

    @property
    def sort_key(self) -> Tuple[str, str]:
        return self.relation, ",".join(f"{k}={v}" for k, v in self.params)


def combination_degree(combo: Combination, alg: FrobeniusAlgebra) -> Optional[Tuple[int, int]]:
    """Common degree of the nonzero terms; None when every term is zero."""
    degrees = {ir.degree(D, alg) for c, D in combo if c and D.coefficient}
    if len(degrees) > 1:
        raise DegreeMismatch(f"terms have different degrees: {sorted(degrees)}")
    return degrees.pop() if degrees else None


def check_relation(lhs: Combination, rhs: Combination, n_range: Iterable[int],
                   alg: FrobeniusAlgebra) -> CheckResult:
    """Compare sum c_i F_n(D_i) on both sides for each n.

    Raises BoundaryMismatch when the terms disagree on source/target and
    DegreeMismatch when the nonzero terms disagree on degree.
    """
    ir.boundary(list(lhs) + list(rhs))
    combination_degree(list(lhs) + list(rhs), alg)
    result = CheckResult()
    for n in n_range:
        try:
            left, right = evaluate_sum(lhs, alg, n), evaluate_sum(rhs, alg, n)
        except SizeLimit as exc:
            result.labels.append(LabelResult(n, SKIPPED, str(exc)))
            continue
        diff = left.first_difference(right)
        if diff is None:
            result.labels.append(LabelResult(n, PASS))
        else:
            keys, term, a, b = diff
            detail = f"n={n}: generator {keys}, term {term}: lhs {a} != rhs {b}"
            result.labels.append(LabelResult(n, FAIL, detail))
    return result


def run_case(case: Case, alg: FrobeniusAlgebra, labels: Sequence[int]) -> CheckResult:
    if case.skip:
        return CheckResult(case.relation, case.params, [], note=case.skip, ref=case.ref)
    try:
        result = check_relation(case.lhs, case.rhs, labels, alg)
    except SizeLimit as exc:
        return CheckResult(case.relation, case.params, [], note=str(exc), ref=case.ref)
    result.relation, result.params, result.ref = case.relation, case.params, case.ref
    if result.status == FAIL:
        log.warning("%s %s failed: %s", case.relation, result.sort_key[1], result.detail)
    return result


def run_cases(cases: Sequence[Case], alg: FrobeniusAlgebra, labels: Sequence[int],
              workers: Optional[int] = None) -> List[CheckResult]:
    """Check every case, fanned out over joblib workers; results sorted by (relation, params)."""
    workers = workers or config.WORKERS
    log.info("checking %d cases on %s at labels %s", len(cases), alg.name, list(labels))
    results = Parallel(n_jobs=workers)(delayed(run_case)(case, alg, labels) for case in cases)
    return sorted(results, key=lambda r: r.sort_key)
