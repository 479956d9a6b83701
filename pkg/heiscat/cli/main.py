"""
heiscat command line
====================
    heiscat validate <spec>
    heiscat check <suite> --algebra <name|path> [--max-n K] [--m M] [--n N]
                  [--f IDEM] [--g IDEM] [--out PATH] [--seed S]
    heiscat heis "<expr>" --algebra <name|path> [--presentation n,n]
                  [--idempotents "e1;e2"] [--type-q 1,2]

Exit codes: 0 success, 1 bad input (invalid spec, unparsable expression,
unknown algebra), 2 when a suite records a failure.

Usage
-----
    python -m heiscat validate trivial
    python -m heiscat check local_relations --algebra trivial --max-n 3 --out reports/local.json
    python -m heiscat heis "Q1^(1) P1^(1)" --algebra trivial
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import List, Optional, Sequence

from heiscat import config
from heiscat.algebra.frobenius import FrobeniusAlgebra
from heiscat.algebra.wreath import check_idempotent
from heiscat.cli import report
from heiscat.cli.specfile import load_algebra
from heiscat.cli.suites import ALL, SUITES, SuiteOptions, idempotent_family, labels_for, parse_idempotent, run_suite
from heiscat.errors import HeisCatError, ParseError
from heiscat.heisenberg.algebra import LEFTMOST, PRESENTATIONS, RIGHTMOST, HeisenbergAlgebra
from heiscat.heisenberg.parser import parse_expression

log = logging.getLogger("heiscat.cli")

EXIT_OK, EXIT_ERROR, EXIT_FAILURES = 0, 1, 2


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parse_args(argv)
    logging.basicConfig(level=args.log_level, format=config.LOG_FORMAT, datefmt=config.LOG_DATEFMT)
    try:
        return args.handler(args)
    except ParseError as exc:
        _error(str(exc))
        if getattr(args, "expr", None) is not None:
            print(f"  {args.expr}\n  {' ' * exc.position}^", file=sys.stderr)
        return EXIT_ERROR
    except HeisCatError as exc:
        _error(f"{type(exc).__name__}: {exc}")
        return EXIT_ERROR


def _parse_args(argv: Optional[Sequence[str]]) -> argparse.Namespace:
    parser = argparse.ArgumentParser(prog="heiscat", description="Heisenberg category engine for a Frobenius superalgebra.")
    parser.add_argument("--log-level", default=config.LOG_LEVEL, choices=("DEBUG", "INFO", "WARNING", "ERROR"))
    sub = parser.add_subparsers(dest="command", required=True)

    validate = sub.add_parser("validate", help="check an algebra spec and print its Frobenius data")
    validate.add_argument("spec", help="builtin name or path to a JSON spec")
    validate.set_defaults(handler=cmd_validate)

    check = sub.add_parser("check", help="run a verification suite and write a JSON report")
    check.add_argument("suite", choices=[*SUITES, ALL])
    check.add_argument("--algebra", default="trivial", help="builtin name or path to a JSON spec")
    check.add_argument("--max-n", type=int, default=3, help="largest ambient region label")
    check.add_argument("--m", type=int, default=None)
    check.add_argument("--n", type=int, default=None)
    check.add_argument("--f", default=None, help="idempotent, e.g. 1 or e1")
    check.add_argument("--g", default=None, help="idempotent, e.g. 1 or e2")
    check.add_argument("--out", default=None, help="report path; stdout when omitted")
    check.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    check.add_argument("--samples", type=int, default=100, help="randomized samples per property")
    check.add_argument("--workers", type=int, default=None, help=f"joblib workers (default {config.WORKERS})")
    check.set_defaults(handler=cmd_check)

    heis = sub.add_parser("heis", help="normal order an expression in the Heisenberg algebra")
    heis.add_argument("expr")
    heis.add_argument("--algebra", default="trivial")
    heis.add_argument("--presentation", default="n,n", choices=list(PRESENTATIONS))
    heis.add_argument("--idempotents", default=None, help="semicolon separated, e.g. \"e1;e2\"")
    heis.add_argument("--type-q", default=(), type=_index_list, help="comma separated type-Q indices, e.g. 1,2")
    heis.add_argument("--strategy", default=LEFTMOST, choices=(LEFTMOST, RIGHTMOST))
    heis.set_defaults(handler=cmd_heis)
    return parser.parse_args(argv)


def _index_list(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def _error(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


# ---------------------------------------------------------------------------
# validate
# ---------------------------------------------------------------------------

def describe(alg: FrobeniusAlgebra) -> List[str]:
    """The human summary ``validate`` prints."""
    psi = "id" if alg.nakayama_is_identity() else "non-trivial"
    lines = [f"{alg.name}: dim {alg.dim}", f"δ={alg.delta} σ={alg.sigma} ψ={psi}", "dual basis:"]
    for i, label in enumerate(alg.labels):
        lines.append(f"  {label}^v = {alg.format(alg.dual_basis[i])}")
    lines.append("ψ:")
    for i, label in enumerate(alg.labels):
        lines.append(f"  ψ({label}) = {alg.format(alg.nakayama_table[i])}")
    return lines


def cmd_validate(args: argparse.Namespace) -> int:
    alg = load_algebra(args.spec)
    print("\n".join(describe(alg)))
    return EXIT_OK


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def cmd_check(args: argparse.Namespace) -> int:
    alg = load_algebra(args.algebra)
    opts = SuiteOptions(max_n=args.max_n, m=args.m, n=args.n, f=args.f, g=args.g, seed=args.seed,
                        samples=args.samples, workers=args.workers)
    try:
        family = idempotent_family(alg, opts)
    except (KeyError, ValueError) as exc:
        _error(f"bad idempotent: {exc}")
        return EXIT_ERROR
    for _, vec in family:
        check_idempotent(alg, vec)
    records = run_suite(args.suite, alg, opts)
    tree = report.build_report(args.suite, alg.name, records, args.seed, labels_for(alg, args.max_n))
    counts = tree["totals"]
    if args.out:
        out = report.write_report(tree, args.out)
        print(f"Wrote {len(records)} cases to {out}: {counts['pass']} pass, {counts['fail']} fail, "
              f"{counts['skipped']} skipped")
    else:
        sys.stdout.write(report.dumps(tree))
    for case in report.failures(tree):
        log.error("%s %s: %s", case["id"], case["params"], case.get("detail"))
    return EXIT_FAILURES if counts["fail"] else EXIT_OK


# ---------------------------------------------------------------------------
# heis
# ---------------------------------------------------------------------------

def cmd_heis(args: argparse.Namespace) -> int:
    alg = load_algebra(args.algebra)
    idempotents = None
    if args.idempotents:
        try:
            idempotents = [parse_idempotent(alg, t) for t in args.idempotents.split(";") if t.strip()]
        except (KeyError, ValueError) as exc:
            _error(f"bad idempotent: {exc}")
            return EXIT_ERROR
    H = HeisenbergAlgebra(alg, idempotents, args.type_q)
    terms = parse_expression(args.expr)
    print(H.normal_order(terms, args.presentation, args.strategy))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
