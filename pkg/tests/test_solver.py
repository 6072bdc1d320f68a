"""Modular elimination, CRT lifting and exact nullvector recovery."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xyzchain.basis import enumerate_sector
from xyzchain.hamiltonian import reduced_matrix
from xyzchain.solver import (PRIMES, DegenerateSampleError, collect_samples,
                             crt_pair, rational_nullvector,
                             rational_reconstruct, sample_points)


def test_primes_are_prime_and_word_sized():
    import sympy
    for p in PRIMES:
        assert sympy.isprime(p)
        assert p < 2 ** 31
    assert len(set(PRIMES)) == len(PRIMES)


@given(st.integers(0), st.sampled_from(PRIMES[:4]), st.sampled_from(PRIMES[4:8]))
def test_crt_pair_round_trip(x, p, q):
    r, m = crt_pair(x % p, p, x % q, q)
    assert m == p * q
    assert r % p == x % p and r % q == x % q


@given(st.integers(-10 ** 6, 10 ** 6), st.integers(1, 10 ** 6))
def test_rational_reconstruction_round_trip(num, den):
    """Any fraction with |num|, den below sqrt(M/2) is recovered from its
    residue; the modulus here is a product of four solver primes."""
    m = 1
    for p in PRIMES[:4]:
        m *= p
    x = Fraction(num, den)
    u = (x.numerator * pow(x.denominator, -1, m)) % m
    assert rational_reconstruct(u, m) == x


def _dense_fraction_nullvector(n, alpha):
    """Independent oracle: full-pivot Gauss elimination over Fraction."""
    basis = enumerate_sector(n, "even")
    m = reduced_matrix(Fraction(alpha), basis)
    dim = len(basis.orbits)
    a = [[Fraction(0)] * dim for _ in range(dim)]
    for i, row in enumerate(m.rows):
        for col, x in row:
            a[i][col] = x
    pivots = []
    r = 0
    for c in range(dim):
        piv = next((i for i in range(r, dim) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        scale = a[r][c]
        a[r] = [x / scale for x in a[r]]
        for i in range(dim):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(dim) if c not in pivots]
    assert len(free) == 1, "oracle expects a one-dimensional nullspace"
    v = [Fraction(0)] * dim
    v[free[0]] = Fraction(1)
    for row, c in zip(range(r), pivots):
        v[c] = -a[row][free[0]]
    ref = basis.reference_index
    return [x / v[ref] for x in v]


@pytest.mark.parametrize("n", [3, 5, 7])
@pytest.mark.parametrize("alpha", [2, 3, 7])
def test_modular_solver_matches_dense_oracle(n, alpha):
    sample = rational_nullvector(n, "even", alpha)
    assert sample.components == _dense_fraction_nullvector(n, alpha)


def test_reference_component_is_one():
    sample = rational_nullvector(9, "even", 4)
    assert sample.components[sample.reference] == 1


def test_alpha_one_is_degenerate():
    """At alpha = 1 two couplings coincide and the distinguished level is no
    longer separated: the solver must refuse rather than return garbage."""
    with pytest.raises(DegenerateSampleError):
        rational_nullvector(5, "even", 1)


def test_sample_points_skip_blacklist():
    assert sample_points(4) == [2, 3, 4, 5]
    assert sample_points(4, blacklist=(3, 4)) == [2, 5, 6, 7]


def test_collect_samples_serial_and_parallel_agree():
    serial, bl1 = collect_samples(5, "even", 6)
    parallel, bl2 = collect_samples(5, "even", 6, jobs=2)
    assert bl1 == bl2 == []
    assert [s.alpha for s in serial] == [s.alpha for s in parallel]
    assert [s.components for s in serial] == [s.components for s in parallel]
