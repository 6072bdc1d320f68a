#!/usr/bin/env python3
"""Sweep the elliptic modulus and report the transfer-matrix check residuals.

Usage: python scripts/elliptic_sweep.py [--points 9] [--n 3 5 7]

Prints, for each modulus, the worst residual of every numeric check so the
tolerance margins are visible rather than just pass/fail.
"""

import argparse

import numpy as np

from xyzchain import elliptic8v, polyvec


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--points", type=int, default=9)
    parser.add_argument("--n", type=int, nargs="+", default=[3, 5, 7])
    args = parser.parse_args()

    vectors = {n: polyvec.compute_ground_state(n)[0] for n in args.n}
    ks = np.linspace(0.05, 0.85, args.points)
    print(f"{'k':>5} {'alpha':>8} {'invariants':>11} {'inversion':>10} "
          f"{'H-link':>9} {'eigenvalue':>11} {'defect':>9}")
    for k in ks:
        k = float(k)
        params = elliptic8v.make_params(k)
        alpha = elliptic8v.alpha_of_k(k)
        inv = elliptic8v.check_weight_invariants(params).details["max_residual"]
        inver = max(elliptic8v.check_inversion(params, n).details["max_residual"]
                    for n in args.n)
        hlink = max(elliptic8v.check_hamiltonian_link(params, n)
                    .details["relative_error"] for n in args.n)
        eig = 0.0
        for n in args.n:
            psi = elliptic8v.numeric_ground_vector(vectors[n], alpha)
            eig = max(eig, elliptic8v.check_eigenvalue(params, n, psi)
                      .details["max_relative_residual"])
        defect = max(elliptic8v.check_defect_equations(params, n)
                     .details["limit_error"] for n in args.n)
        print(f"{k:5.2f} {alpha:8.5f} {inv:11.2e} {inver:10.2e} "
              f"{hlink:9.2e} {eig:11.2e} {defect:9.2e}")


if __name__ == "__main__":
    main()
