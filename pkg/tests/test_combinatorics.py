"""Product-formula enumeration counts."""

import pytest

from xyzchain.combinatorics import a_v, n_8


def test_vertically_symmetric_asm_counts():
    # OEIS A005156
    assert [a_v(2 * m + 1) for m in range(5)] == [1, 1, 3, 26, 646]


def test_transpose_complement_plane_partition_counts():
    # OEIS A051255
    assert [n_8(2 * m) for m in range(1, 5)] == [1, 2, 11, 170]


def test_counts_are_positive_integers():
    for m in range(1, 12):
        assert isinstance(a_v(2 * m + 1), int) and a_v(2 * m + 1) > 0
        assert isinstance(n_8(2 * m), int) and n_8(2 * m) > 0


def test_growth_is_monotone():
    vals = [n_8(2 * m) for m in range(1, 10)]
    assert vals == sorted(vals)
