"""Exact ground states of odd periodic XYZ chains along the combinatorial line.

The couplings are parametrised by a single variable alpha,

    Jx = 1 + alpha,  Jy = 1 - alpha,  Jz = (alpha**2 - 1) / 2,

for which every odd chain length has the ground energy
E = -(N/4) * (3 + alpha**2).  The package reconstructs the corresponding
eigenvector with integer polynomial components, checks the combinatorial
structure of those polynomials, and cross-validates everything against the
eight-vertex transfer matrix at the matching elliptic parametrisation.
"""

from .basis import SectorBasis, SpinState, enumerate_sector, state_from_string, state_string
from .combinatorics import a_v, n_8
from .elliptic8v import EllipticParams, make_params, run_elliptic_suite
from .hamiltonian import CouplingConstants, couplings, ground_energy
from .polyvec import (
    GroundStateVector,
    compute_ground_state,
    degree_bound,
    reconstruct,
    verify_conjectures,
)
from .solver import collect_samples, rational_nullvector
from .sumrules import full_report, linear_sum, quadratic_sum

__all__ = [
    "CouplingConstants",
    "EllipticParams",
    "GroundStateVector",
    "SectorBasis",
    "SpinState",
    "a_v",
    "collect_samples",
    "compute_ground_state",
    "couplings",
    "degree_bound",
    "enumerate_sector",
    "full_report",
    "ground_energy",
    "linear_sum",
    "make_params",
    "n_8",
    "quadratic_sum",
    "rational_nullvector",
    "reconstruct",
    "state_from_string",
    "state_string",
    "verify_conjectures",
    "run_elliptic_suite",
]

__version__ = "0.1.0"
