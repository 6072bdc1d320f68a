#!/usr/bin/env python3
"""Print the integer-polynomial component tables for small chains.

Usage: python scripts/components_table.py [N ...]   (default 3 5 7)
"""

import sys

from xyzchain import polyvec
from xyzchain.basis import state_string
from xyzchain.cli import poly_str


def main(argv):
    lengths = [int(a) for a in argv] or [3, 5, 7]
    for n in lengths:
        vec, provenance = polyvec.compute_ground_state(n)
        print(f"n = {n}  (degree bound {vec.degree_bound}, "
              f"samples at {', '.join(provenance['sample_points'])})")
        for (rep, size), p in zip(vec.orbits, vec.entries):
            print(f"  {state_string(rep, n)}  {poly_str(p)}")
        print()


if __name__ == "__main__":
    main(sys.argv[1:])
