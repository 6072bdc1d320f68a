"""Configuration enumeration, cyclic orbits and symmetry operators."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xyzchain.basis import (SpinState, canonical_representative,
                            enumerate_sector, flip_bits, rotation_matrix,
                            shift_bits, shift_matrix, state_from_string,
                            state_string, up_count)

odd_n = st.integers(min_value=1, max_value=10).map(lambda k: 2 * k - 1)


@st.composite
def state_and_n(draw):
    n = draw(odd_n)
    return draw(st.integers(0, (1 << n) - 1)), n


@given(state_and_n())
def test_shift_has_order_n(sn):
    s, n = sn
    t = s
    for _ in range(n):
        t = shift_bits(t, n)
    assert t == s


@given(state_and_n())
def test_flip_is_an_involution(sn):
    s, n = sn
    assert flip_bits(flip_bits(s, n), n) == s


@given(state_and_n())
def test_shift_and_flip_commute(sn):
    s, n = sn
    assert shift_bits(flip_bits(s, n), n) == flip_bits(shift_bits(s, n), n)


@given(state_and_n())
def test_string_round_trip(sn):
    s, n = sn
    assert state_from_string(state_string(s, n)) == s


@given(state_and_n())
def test_canonical_rep_is_rotation_invariant(sn):
    s, n = sn
    rep, size = canonical_representative(s, n)
    assert canonical_representative(shift_bits(s, n), n) == (rep, size)
    assert n % size == 0
    # minimal among all rotations of itself in the '-' < '+' string order
    # (note ASCII orders the two characters the other way around)
    order = str.maketrans("-+", "01")
    t = rep
    for _ in range(n):
        t = shift_bits(t, n)
        assert state_string(rep, n).translate(order) \
            <= state_string(t, n).translate(order)


@given(state_and_n())
def test_shift_preserves_up_count(sn):
    s, n = sn
    assert up_count(shift_bits(s, n)) == up_count(s)


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 11])
def test_sector_sizes_partition_the_cube(n):
    even = enumerate_sector(n, "even")
    odd = enumerate_sector(n, "odd")
    for basis in (even, odd):
        assert sum(size for _, size in basis.orbits) == 1 << (n - 1)
        # index covers exactly the sector's states
        assert len(basis.index) == 1 << (n - 1)


@pytest.mark.parametrize("n", [3, 5, 7, 11, 13])
def test_orbit_count_matches_necklace_formula(n):
    """For prime n the orbit census follows from Burnside's lemma: only the
    identity and full-period rotations fix anything."""
    total = len(enumerate_sector(n, "even").orbits) \
        + len(enumerate_sector(n, "odd").orbits)
    assert total == ((1 << n) + (n - 1) * 2) // n


def test_even_n_is_rejected():
    with pytest.raises(ValueError):
        enumerate_sector(4, "even")
    with pytest.raises(ValueError):
        enumerate_sector(0, "even")


def test_reference_state_is_single_down():
    basis = enumerate_sector(5, "even")
    rep, _ = basis.orbits[basis.reference_index]
    assert state_string(rep, 5) == "-++++"


def test_spin_state_wrapper():
    s = SpinState(bits=0b0110, n=5)
    assert str(s) == state_string(0b0110, 5)


@pytest.mark.parametrize("axis", ["x", "y", "z"])
@pytest.mark.parametrize("n", [1, 3, 5])
def test_rotation_matrices_are_unitary_with_order_four(axis, n):
    r = rotation_matrix(axis, n)
    dim = 1 << n
    assert np.allclose(r @ r.conj().T, np.eye(dim), atol=1e-12)
    r4 = np.linalg.matrix_power(r, 4)
    # a pi/2 rotation applied four times is a global phase
    phase = r4[0, 0]
    assert abs(abs(phase) - 1) < 1e-12
    assert np.allclose(r4, phase * np.eye(dim), atol=1e-12)


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_shift_matrix_is_the_shift_permutation(n):
    s = shift_matrix(n)
    for state in range(1 << n):
        col = np.zeros(1 << n)
        col[state] = 1.0
        out = s @ col
        assert out[shift_bits(state, n)] == 1.0
        assert out.sum() == 1.0
