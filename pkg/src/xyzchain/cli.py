"""Batch front end: compute vectors, verify them, run the elliptic suite.

Exit codes: 0 all requested work passed, 1 a verification failed, 2 usage
or internal error.  All persisted JSON is deterministic (sorted keys, no
timestamps), so recomputing the same n yields a byte-identical file.
"""

import argparse
import csv
import json
import sys
import time
from dataclasses import asdict

from . import elliptic8v, polyvec, sumrules
from .solver import SolverError


def poly_str(coeffs, var="a"):
    """Human-readable ascending-power polynomial, e.g. '3a + 5a^3'."""
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        base = var if i == 1 else f"{var}^{i}"
        if c == 1:
            terms.append(base)
        elif c == -1:
            terms.append(f"-{base}")
        else:
            terms.append(f"{c}{base}")
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


def _odd_n(value):
    n = int(value)
    if n < 1 or n % 2 == 0:
        raise argparse.ArgumentTypeError(
            f"chain length must be a positive odd integer, got {value}")
    return n


def _load_or_compute(args):
    if getattr(args, "input", None):
        return polyvec.load(args.input)
    vec, _ = polyvec.compute_ground_state(args.n, jobs=args.jobs)
    return vec


def cmd_compute(args):
    t0 = time.perf_counter()
    vec, provenance = polyvec.compute_ground_state(args.n, jobs=args.jobs)
    elapsed = time.perf_counter() - t0
    out = args.output or f"groundstate-n{args.n}.json"
    # wall time is printed, never persisted: files must be reproducible
    polyvec.save(vec, out, provenance=provenance)
    print(f"n = {args.n}: {vec.norbits} orbit components, "
          f"degree bound {vec.degree_bound}, wrote {out} "
          f"({elapsed:.2f} s)")
    return 0


SUM_RULE_SELECTOR = "sum_rules"


def cmd_verify(args):
    vec = _load_or_compute(args)
    wanted = args.conjectures.split(",") if args.conjectures else ["all"]
    available = list(polyvec.CONJECTURE_CHECKS) + [SUM_RULE_SELECTOR]
    if "all" in wanted:
        wanted = available
    unknown = [w for w in wanted if w not in available]
    if unknown:
        raise ValueError(f"unknown conjecture selector(s) {unknown}; "
                         f"choose from {available + ['all']}")
    reports = polyvec.verify_conjectures(
        vec, [w for w in wanted if w != SUM_RULE_SELECTOR])
    if SUM_RULE_SELECTOR in wanted:
        sr = sumrules.full_report(vec)
        reports.extend(sr.checks.values())
    for r in reports:
        print(f"[{'PASS' if r.ok else 'FAIL'}] {r.name}")
    if args.json:
        doc = {"n": vec.n, "checks": [asdict(r) for r in reports],
               "all_passed": all(r.ok for r in reports)}
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1, sort_keys=True, default=str)
            fh.write("\n")
    return 0 if all(r.ok for r in reports) else 1


def cmd_elliptic_check(args):
    t0 = time.perf_counter()
    vectors = {n: polyvec.compute_ground_state(n)[0] for n in args.n}
    failures = 0
    all_reports = []
    for k in args.k:
        alpha = elliptic8v.alpha_of_k(k, args.eta)
        numeric = {n: elliptic8v.numeric_ground_vector(v, alpha)
                   for n, v in vectors.items()}
        reports = elliptic8v.run_elliptic_suite(
            k, n_values=tuple(args.n), ground_vectors=numeric,
            inhomogeneous_n=tuple(n for n in args.n if n <= 5))
        for r in reports:
            tag = f"n={r.details['n']}" if "n" in r.details else "    "
            print(f"[{'PASS' if r.ok else 'FAIL'}] k={k:g} {tag} {r.name}")
            failures += not r.ok
            all_reports.append({"k": k, **asdict(r)})
    print(f"elliptic suite: {len(all_reports) - failures}/{len(all_reports)} "
          f"passed ({time.perf_counter() - t0:.1f} s)")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump({"eta": args.eta, "reports": all_reports}, fh,
                      indent=1, sort_keys=True, default=str)
            fh.write("\n")
    return 0 if failures == 0 else 1


def cmd_report(args):
    vec = _load_or_compute(args)
    from .basis import state_string
    print(f"n = {vec.n}, degree bound {vec.degree_bound}, "
          f"{vec.norbits} orbit components")
    if vec.n <= 9:
        width = max(vec.n, 5)
        for (rep, size), p in zip(vec.orbits, vec.entries):
            print(f"  {state_string(rep, vec.n):>{width}}  "
                  f"(orbit {size:>2})  {poly_str(p)}")
    sr = sumrules.full_report(vec)
    div = sr.checks["s2_divisibility"]
    print(f"  S1 = {poly_str(sr.s1)}")
    print(f"  S2 = {poly_str(sr.s2)}")
    if div.ok:
        from fractions import Fraction
        f = [Fraction(c) for c in div.details["quotient"]]
        print(f"  F  = {poly_str(f)}   "
              f"[(a+3)^{div.details['m']} S2 / S1]")
    for name, check in sr.checks.items():
        print(f"[{'PASS' if check.ok else 'FAIL'}] {name}")
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["series", "power", "coefficient"])
            for name, coeffs in [("S1", sr.s1), ("S2", sr.s2)]:
                for i, c in enumerate(coeffs):
                    writer.writerow([name, i, c])
            if div.ok:
                for i, c in enumerate(div.details["quotient"]):
                    writer.writerow(["F", i, c])
        print(f"wrote {args.csv}")
    return 0 if sr.ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="xyzchain",
        description="Exact eigenvector structure of odd periodic XYZ chains "
                    "along the combinatorial line of couplings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="solve and persist one chain length")
    p.add_argument("--n", type=_odd_n, required=True)
    p.add_argument("--output", help="output JSON path")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for sample points (default 1)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run structural checks on a vector")
    p.add_argument("--n", type=_odd_n, help="compute this length, then verify")
    p.add_argument("--input", help="verify a previously saved JSON file")
    p.add_argument("--conjectures", default="all",
                   help="comma-separated check names, or 'all'")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", help="also write a JSON report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("elliptic-check",
                       help="numeric eight-vertex transfer-matrix suite")
    p.add_argument("--k", type=float, nargs="+", default=[0.1, 0.3, 0.6],
                   help="elliptic moduli, each in [0, 1)")
    p.add_argument("--n", type=_odd_n, nargs="+", default=[3, 5, 7])
    p.add_argument("--eta", default="2K/3",
                   choices=sorted(elliptic8v.ETA_CHOICES))
    p.add_argument("--json", help="also write a JSON report here")
    p.set_defaults(func=cmd_elliptic_check)

    p = sub.add_parser("report",
                       help="component table and sum-rule summary")
    p.add_argument("--n", type=_odd_n)
    p.add_argument("--input", help="report on a previously saved JSON file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--csv", help="write S1/S2/F coefficients as CSV")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command in ("verify", "report") and not (args.input or args.n):
        print("error: provide --n or --input", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (SolverError, ValueError, OSError, KeyError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
