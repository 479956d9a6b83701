"""
Batch suite runner
==================
Runs every verification suite over every builtin algebra and writes one
JSON report per (algebra, suite) plus a CSV summary of pass/fail/skipped
totals.

    reports/<algebra>/<suite>.json
    reports/summary.csv

Usage
-----
    python -m scripts.run_all_suites --output reports
    python -m scripts.run_all_suites --algebras clifford exterior_line --suites curls_bubbles --max-n 2
"""

from __future__ import annotations

import argparse
import csv
import logging
from pathlib import Path
from typing import Dict, List

from heiscat import config
from heiscat.algebra.frobenius import BUILTIN_NAMES
from heiscat.cli import report
from heiscat.cli.specfile import load_algebra
from heiscat.cli.suites import SUITES, SuiteOptions, labels_for, run_suite

log = logging.getLogger("heiscat.scripts.run_all_suites")


def main() -> None:
    args = _parse_args()
    logging.basicConfig(level=args.log_level, format=config.LOG_FORMAT, datefmt=config.LOG_DATEFMT)
    output = Path(args.output)
    opts = SuiteOptions(max_n=args.max_n, seed=args.seed, samples=args.samples, workers=args.workers)

    rows: List[Dict[str, object]] = []
    for name in args.algebras:
        alg = load_algebra(name)
        for suite in args.suites:
            records = run_suite(suite, alg, opts)
            tree = report.build_report(suite, alg.name, records, args.seed, labels_for(alg, args.max_n))
            report.write_report(tree, output / alg.name / f"{suite}.json")
            rows.append({"algebra": alg.name, "suite": suite, **tree["totals"]})
            if tree["totals"]["fail"]:
                log.error("%s on %s: %d failures", suite, alg.name, tree["totals"]["fail"])

    summary = output / "summary.csv"
    _write_summary(summary, rows)
    print(f"Wrote {len(rows)} reports to {output}")


def _parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description="Run every verification suite over the builtin algebras.")
    parser.add_argument("--algebras", nargs="+", default=list(BUILTIN_NAMES))
    parser.add_argument("--suites", nargs="+", default=list(SUITES), choices=list(SUITES))
    parser.add_argument("--max-n", type=int, default=3)
    parser.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    parser.add_argument("--samples", type=int, default=20)
    parser.add_argument("--workers", type=int, default=config.WORKERS)
    parser.add_argument("--log-level", default=config.LOG_LEVEL)
    parser.add_argument("--output", default="reports")
    return parser.parse_args()


def _write_summary(path: Path, rows: List[Dict[str, object]]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=["algebra", "suite", "pass", "fail", "skipped"])
        writer.writeheader()
        for row in rows:
            writer.writerow(row)


if __name__ == "__main__":
    main()
