"""Exact rational nullvector of the reduced block at one sample point.

The reduced matrix at an integer sample alpha_s is eliminated modulo several
word-size primes with numpy integer arithmetic; the per-prime nullvectors are
combined by Chinese remaindering and lifted coordinate-wise with balanced
rational reconstruction.  A candidate is accepted only when two consecutive
moduli reconstruct to the same vector and the exact residual vanishes.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .basis import enumerate_sector
from .hamiltonian import reduced_matrix, reduced_rows_scaled

# distinct primes just below 2**31; pairwise products fit in int64 rows
PRIMES = (
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563,
    2147483549, 2147483543, 2147483497, 2147483489, 2147483477,
    2147483423, 2147483399, 2147483353, 2147483323, 2147483269,
    2147483249, 2147483237, 2147483179, 2147483171, 2147483137,
    2147483123, 2147483077, 2147483069, 2147483059, 2147483053,
)


class SolverError(Exception):
    pass


class NoNullvectorError(SolverError):
    """Nullity zero at a sample: the expected eigenvector is missing."""


class DegenerateSampleError(SolverError):
    """Nullity >= 2 persisted across several primes (e.g. alpha = 1)."""


class ReferenceZeroError(SolverError):
    """The reference coordinate vanishes at this sample; resample."""


class ReconstructionError(SolverError):
    """Rational reconstruction did not stabilize within the prime budget."""


@dataclass
class RationalSample:
    """Exact nullvector of H(alpha_s) - E(alpha_s), reference coordinate 1."""
    alpha: Fraction
    components: list
    reference: int
    primes_used: int = 0


def nullvector_mod_p(rows, p, reference):
    """Nullspace basis vector mod p of a sparse integer matrix.

    Returns the vector scaled so the reference coordinate is 1, or raises if
    the nullity differs from one or the reference coordinate vanishes.
    """
    k = len(rows)
    a = np.zeros((k, k), dtype=np.int64)
    for i, row in enumerate(rows):
        for col, x in row:
            a[i, col] = x % p
    rank = 0
    pivot_of_col = {}
    for col in range(k):
        piv = None
        for r in range(rank, k):
            if a[r, col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = a[rank] * inv % p
        factors = a[:, col].copy()
        factors[rank] = 0
        a = (a - factors[:, None] * a[rank][None, :]) % p
        pivot_of_col[col] = rank
        rank += 1
    nullity = k - rank
    if nullity == 0:
        raise NoNullvectorError("matrix is nonsingular mod p: no nullvector")
    if nullity > 1:
        raise DegenerateSampleError(f"nullity {nullity} mod {p}")
    free_col = next(c for c in range(k) if c not in pivot_of_col)
    x = np.zeros(k, dtype=np.int64)
    x[free_col] = 1
    for col, r in pivot_of_col.items():
        x[col] = (-int(a[r, free_col])) % p
    if x[reference] == 0:
        raise ReferenceZeroError("reference coordinate is zero mod p")
    x = x * pow(int(x[reference]), -1, p) % p
    return [int(v) for v in x]


def crt_pair(r1, m1, r2, m2):
    """Combine residues r1 mod m1 and r2 mod m2 (coprime moduli)."""
    h = (r2 - r1) * pow(m1 % m2, -1, m2) % m2
    return r1 + m1 * h, m1 * m2


def rational_reconstruct(u, m):
    """Balanced (Wang) rational reconstruction of u mod m, or None.

    Finds n/d with |n|, d <= floor(sqrt(m/2)) and n == u*d (mod m).
    """
    bound = isqrt(m // 2)
    r0, r1 = m, u % m
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound or gcd(r1, abs(t1)) != 1:
        return None
    if t1 < 0:
        return Fraction(-r1, -t1)
    return Fraction(r1, t1)


def _verify_residual(matrix, components):
    for row in matrix.rows:
        if sum(x * components[col] for col, x in row) != 0:
            return False
    return True


def solve_one_prime(n, parity, alpha_s, p):
    """Pure (sample, prime) unit of work: nullvector mod p, or an error."""
    basis = enumerate_sector(n, parity)
    rows = reduced_rows_scaled(basis, alpha_s)
    return nullvector_mod_p(rows, p, basis.reference_index)


def rational_nullvector(n, parity, alpha_s, basis=None, prime_budget=len(PRIMES),
                        max_bad_primes=3):
    """CRT-combined, reconstructed and exactly verified nullvector."""
    alpha_s = int(alpha_s)
    if abs(alpha_s) == 1:
        # two of the three couplings vanish here and the chain collapses to
        # a classical Ising line; the point is permanently blacklisted
        raise DegenerateSampleError(
            f"alpha = {alpha_s} has degenerate couplings and is excluded "
            f"from sampling")
    if basis is None:
        basis = enumerate_sector(n, parity)
    ref = basis.reference_index
    rows = reduced_rows_scaled(basis, alpha_s)
    exact = reduced_matrix(alpha_s, basis)
    residues = None
    modulus = 1
    previous = None
    degenerate = 0
    used = 0
    for p in PRIMES[:prime_budget]:
        try:
            xp = nullvector_mod_p(rows, p, ref)
        except DegenerateSampleError:
            degenerate += 1
            if degenerate >= max_bad_primes:
                raise DegenerateSampleError(
                    f"nullity >= 2 persisted over {degenerate} primes at "
                    f"alpha = {alpha_s}: degenerate sample")
            continue
        used += 1
        if residues is None:
            residues, modulus = list(xp), p
        else:
            combined = []
            for r, r2 in zip(residues, xp):
                c, _ = crt_pair(r, modulus, r2, p)
                combined.append(c)
            residues, modulus = combined, modulus * p
        candidate = [rational_reconstruct(r, modulus) for r in residues]
        if any(c is None for c in candidate):
            previous = None
            continue
        if previous is not None and candidate == previous:
            if _verify_residual(exact, candidate):
                assert candidate[ref] == 1
                return RationalSample(alpha=Fraction(alpha_s),
                                      components=candidate,
                                      reference=ref, primes_used=used)
            raise SolverError("reconstruction stabilized but the exact "
                              "residual is nonzero: implementation bug")
        previous = candidate
    raise ReconstructionError(
        f"reconstruction did not stabilize within {prime_budget} primes "
        f"at alpha = {alpha_s}")


def sample_points(count, blacklist=()):
    """Deterministic sample sequence 2, 3, 4, ... skipping 1 and bad points."""
    out = []
    a = 2
    while len(out) < count:
        if a not in blacklist:
            out.append(a)
        a += 1
    return out


def _solve_point(args):
    """Worker-pool unit: one sample point, bad points reported as None."""
    n, parity, a = args
    try:
        return a, rational_nullvector(n, parity, a)
    except (DegenerateSampleError, ReferenceZeroError):
        return a, None


def collect_samples(n, parity, count, basis=None, jobs=1):
    """Solve at `count` good sample points, resampling past bad ones.

    With jobs > 1 the points are distributed over a process pool; the
    returned samples are identical to the serial ones (solving a given
    point is deterministic), just gathered concurrently.
    """
    if basis is None:
        basis = enumerate_sector(n, parity)
    samples = []
    blacklist = []
    a = 2
    if jobs > 1:
        import concurrent.futures as cf
        with cf.ProcessPoolExecutor(max_workers=jobs) as pool:
            while len(samples) < count:
                batch = range(a, a + max(jobs, count - len(samples)))
                a = batch.stop
                for point, sample in pool.map(
                        _solve_point, [(n, parity, b) for b in batch]):
                    if sample is None:
                        blacklist.append(point)
                    elif len(samples) < count:
                        samples.append(sample)
        return samples, blacklist
    while len(samples) < count:
        try:
            samples.append(rational_nullvector(n, parity, a, basis=basis))
        except (DegenerateSampleError, ReferenceZeroError):
            blacklist.append(a)
        a += 1
    return samples, blacklist
