#!/usr/bin/env python3
"""Run every exact check for all odd chain lengths up to a limit.

Usage: python scripts/full_verification.py [max_n] [--jobs J]

For each n this solves the chain, reconstructs the polynomial vector,
and runs the structural conjectures plus all sum rules, timing each stage.
The largest default case (n = 13) takes on the order of a minute.
"""

import argparse
import time

from xyzchain import polyvec, sumrules


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("max_n", type=int, nargs="?", default=13)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    failures = 0
    for n in range(1, args.max_n + 1, 2):
        t0 = time.perf_counter()
        vec, _ = polyvec.compute_ground_state(n, jobs=args.jobs)
        solve = time.perf_counter() - t0
        t0 = time.perf_counter()
        reports = polyvec.verify_conjectures(vec)
        sr = sumrules.full_report(vec)
        reports.extend(sr.checks.values())
        check = time.perf_counter() - t0
        bad = [r.name for r in reports if not r.ok]
        failures += len(bad)
        status = "ok" if not bad else f"FAILED: {bad}"
        print(f"n = {n:>2}  solve {solve:7.2f} s  checks {check:6.2f} s  "
              f"{len(reports)} checks {status}")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
