"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 usage error (including an
oracle budget that would be exceeded), 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .engine import case_counts, characteristic_polynomial, sample_points
from .errors import ArrangementError, BudgetExceeded
from .model import (
    DEFAULT_BUDGET,
    ArrangementSpec,
    SumGraph,
    count_admissible_tuples,
    count_tuples_via_independent_sets,
    reduce,
)
from .reference import adjudicate, load_published_table, odd_primes_from, reference_polynomial


def output_document(spec: ArrangementSpec, result, verdict=None, runtime_ms: int = 0) -> dict:
    fam = reduce(spec)
    return {
        "n": spec.n,
        "k": spec.k,
        "l": spec.l,
        "family": fam.family.value,
        "k_eff": fam.k_eff,
        "coefficients": [str(c) for c in result.poly.coeffs],
        "regions": str(result.regions),
        "samples": [{"t": str(t), "count": str(c)} for t, c in result.samples],
        "verdict": verdict,
        "runtime_ms": runtime_ms,
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc)


def _elapsed_ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


def _fail_internal(exc: Exception) -> int:
    print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
    return 3


def cmd_chi(args) -> int:
    spec = ArrangementSpec(args.n, args.k, args.l)
    start = time.perf_counter()
    try:
        result = characteristic_polynomial(spec)
    except ArrangementError as exc:
        return _fail_internal(exc)
    if args.format == "json":
        print(dumps(output_document(spec, result, runtime_ms=_elapsed_ms(start))))
    elif args.format == "latex":
        print(result.poly.format("latex"))
        print(f"% regions = {result.regions}")
    else:
        print(f"{result.poly}; regions = {result.regions}")
    return 0


def _verify_grid(args):
    for n in range(1, args.n_max + 1):
        for k in range(args.k_max + 1):
            for l in range(args.l_max + 1):
                spec = ArrangementSpec(n, k, l)
                fam = reduce(spec)
                yield spec, odd_primes_from(sample_points(n, fam.k_eff)[0], args.primes)


def cmd_verify(args) -> int:
    grid = list(_verify_grid(args))
    work = sum(p ** spec.n for spec, primes in grid for p in primes)
    if work > args.budget:
        print(f"BudgetExceeded: grid needs about {work} tuple candidates, budget is {args.budget}",
              file=sys.stderr)
        return 2

    mismatches = []
    checked = 0
    try:
        for spec, primes in grid:
            fam = reduce(spec)
            poly = characteristic_polynomial(spec).poly
            ref = reference_polynomial(fam)
            if ref is not None and ref != poly:
                mismatches.append({"n": spec.n, "k": spec.k, "l": spec.l, "check": "reference",
                                   "expected": str(ref), "engine": str(poly)})
            for p in primes:
                oracle = count_admissible_tuples(spec.n, spec.constants, p, args.budget)
                found = {"cases": case_counts(fam, p).total, "polynomial": poly(p)}
                if args.independent_sets:
                    found["independent_sets"] = count_tuples_via_independent_sets(
                        SumGraph(p, spec.constants), spec.n)
                for check, value in found.items():
                    checked += 1
                    if value != oracle:
                        mismatches.append({"n": spec.n, "k": spec.k, "l": spec.l, "t": str(p),
                                           "check": check, "expected": str(oracle),
                                           "engine": str(value)})
    except BudgetExceeded as exc:
        print(f"BudgetExceeded: {exc}", file=sys.stderr)
        return 2
    except ArrangementError as exc:
        return _fail_internal(exc)

    for m in mismatches:
        print(dumps(m))
    if mismatches:
        return 1
    print(dumps({"checked": checked, "specs": len(grid), "mismatches": 0}))
    return 0


def cmd_table(args) -> int:
    table = load_published_table()
    rows = []
    try:
        for entry in table.entries:
            spec = ArrangementSpec(entry.n, entry.k, 0)
            start = time.perf_counter()
            report = adjudicate(spec, budget=args.budget)
            rows.append((entry, spec, report, _elapsed_ms(start)))
    except BudgetExceeded as exc:
        print(f"BudgetExceeded: {exc}", file=sys.stderr)
        return 2
    except ArrangementError as exc:
        return _fail_internal(exc)

    if args.format == "json":
        for entry, spec, report, ms in rows:
            doc = output_document(spec, characteristic_polynomial(spec), report.verdict.value, ms)
            doc["published_coefficients"] = [str(c) for c in entry.poly.coeffs]
            print(dumps(doc))
        return 0

    for entry, spec, report, _ in rows:
        print(f"ST n={entry.n} k={entry.k}  {report.verdict.value}")
        print(f"    published: {entry.poly}")
        print(f"    engine   : {report.engine_poly}")
        for note in report.notes:
            print(f"    note     : {note}")
    for seq in table.sequences:
        ns = range(seq.n_from, seq.n_from + len(seq.regions))
        ours = [characteristic_polynomial(ArrangementSpec(n, seq.k, 0)).regions for n in ns]
        marks = ["" if not d else "*" for d in seq.disputed]
        print(f"regions ST k={seq.k}, n>={seq.n_from}")
        print("    published: " + ", ".join(f"{v}{m}" for v, m in zip(seq.regions, marks)))
        print("    engine   : " + ", ".join(map(str, ours)))
    return 0


def cmd_sequence(args) -> int:
    start = time.perf_counter()
    values = []
    try:
        for n in range(args.n_from, args.n_to + 1):
            values.append(characteristic_polynomial(ArrangementSpec(n, args.k, args.l)).regions)
    except ArrangementError as exc:
        return _fail_internal(exc)
    fam = reduce(ArrangementSpec(1, args.k, args.l))
    print(", ".join(map(str, values)))
    print(dumps({
        "k": args.k,
        "l": args.l,
        "family": fam.family.value,
        "k_eff": fam.k_eff,
        "n_from": args.n_from,
        "n_to": args.n_to,
        "regions": [str(v) for v in values],
        "runtime_ms": _elapsed_ms(start),
    }))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threshold-arrangements",
        description="Characteristic polynomials of x_i + x_j = -l..k arrangements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", help="characteristic polynomial and region count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--format", choices=("json", "latex", "plain"), default="json")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("verify", help="engine against brute-force counts on a grid")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--l-max", type=int, default=0)
    p.add_argument("--primes", type=int, default=2)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--independent-sets", action="store_true",
                   help="also run the independent-set oracle")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="adjudicate the published table")
    p.add_argument("--format", choices=("json", "plain"), default="plain")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("sequence", help="region counts over a range of n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.set_defaults(func=cmd_sequence)
    return parser


def _validate(parser, args):
    if args.command in ("chi", "sequence") and (args.k < 0 or args.l < 0):
        parser.error("--k and --l must be nonnegative")
    if args.command == "chi" and args.n < 1:
        parser.error("--n must be at least 1")
    if args.command == "sequence" and not 1 <= args.n_from <= args.n_to:
        parser.error("need 1 <= --n-from <= --n-to")
    if args.command == "verify":
        if args.n_max < 1 or args.k_max < 0 or args.l_max < 0 or args.primes < 1:
            parser.error("need --n-max >= 1, --k-max >= 0, --l-max >= 0, --primes >= 1")
    if getattr(args, "budget", 1) < 1:
        parser.error("--budget must be positive")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
