"""
Suite reports
=============
A report is one JSON document:

    {
      "meta":   {"tool", "version", "seed", "labels"},
      "suite":  "local_relations",
      "algebra": "trivial",
      "cases":  [{"id", "ref", "params", "status", "detail"?}, ...],
      "totals": {"pass": .., "fail": .., "skipped": ..}
    }

Cases are sorted by id then params and nothing time-dependent is recorded,
so two runs with the same inputs write byte-identical files.
Each case carries the citation key (``ref``) of the identity it certifies,
looked up in the relation catalog or in ``heiscat.references``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from heiscat import __version__
from heiscat.diagram.harness import FAIL, PASS, SKIPPED, CheckResult
from heiscat.diagram.relations import CATALOG
from heiscat.references import ref_for

Params = Tuple[Tuple[str, object], ...]


@dataclass(frozen=True)
class CaseRecord:
    id: str
    params: Params
    status: str
    detail: Optional[str] = None
    ref: str = ""

    @property
    def sort_key(self) -> Tuple[str, str]:
        return self.id, ",".join(f"{k}={v}" for k, v in self.params)

    def to_tree(self) -> Dict[str, Any]:
        tree: Dict[str, Any] = {"id": self.id, "ref": self.ref, "params": {k: _plain(v) for k, v in self.params},
                                "status": self.status}
        if self.detail:
            tree["detail"] = self.detail
        return tree


def _plain(value: object) -> object:
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return str(value)


def from_check(result: CheckResult) -> CaseRecord:
    ref = result.ref or reference(result.relation)
    return CaseRecord(result.relation, result.params, result.status, result.detail, ref)


def reference(rid: str) -> str:
    rel = CATALOG.get(rid)
    return rel.ref if rel else ref_for(rid)


def passed(rid: str, params: Params = (), detail: Optional[str] = None) -> CaseRecord:
    return CaseRecord(rid, params, PASS, detail, reference(rid))


def failed(rid: str, params: Params, detail: str) -> CaseRecord:
    return CaseRecord(rid, params, FAIL, detail, reference(rid))


def skipped(rid: str, params: Params, detail: str) -> CaseRecord:
    return CaseRecord(rid, params, SKIPPED, detail, reference(rid))


def verdict(rid: str, params: Params, ok: bool, detail: str) -> CaseRecord:
    """pass, or fail carrying ``detail``."""
    return passed(rid, params) if ok else failed(rid, params, detail)


def totals(records: Iterable[CaseRecord]) -> Dict[str, int]:
    counts = {PASS: 0, FAIL: 0, SKIPPED: 0}
    for r in records:
        counts[r.status] += 1
    return counts


def build_report(suite: str, algebra: str, records: Sequence[CaseRecord], seed: int,
                 labels: Sequence[int]) -> Dict[str, Any]:
    ordered = sorted(records, key=lambda r: r.sort_key)
    return {
        "meta": {"tool": "heiscat", "version": __version__, "seed": seed, "labels": list(labels)},
        "suite": suite,
        "algebra": algebra,
        "cases": [r.to_tree() for r in ordered],
        "totals": totals(ordered),
    }


def dumps(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def write_report(report: Dict[str, Any], out: Union[str, Path]) -> Path:
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(report), encoding="utf-8")
    return path


def failures(report: Dict[str, Any]) -> List[Dict[str, Any]]:
    return [c for c in report["cases"] if c["status"] == FAIL]
