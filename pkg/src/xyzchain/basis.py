"""Spin configurations, parity sectors, cyclic orbits and symmetry operators.

A configuration mu_1 ... mu_N of the periodic chain is packed into an integer:
bit j set means mu_{j+1} = +1, so the all-minus configuration is the zero
word.  Orbit representatives are the lexicographically smallest strings in
the mu_1-leftmost, '-' < '+' reading, which matches the ordering used for the
component tables.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

MAX_N = 25


def _check_n(n):
    if not isinstance(n, int) or n % 2 == 0 or not 1 <= n <= MAX_N:
        raise ValueError(f"chain length must be odd with 1 <= n <= {MAX_N}, got {n!r}")


@dataclass(frozen=True)
class SpinState:
    """Bit-packed configuration of an odd-length chain."""
    bits: int
    n: int

    def __post_init__(self):
        _check_n(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError("state has bits outside the chain")

    def __str__(self):
        return state_string(self.bits, self.n)


def state_string(bits, n):
    """Configuration as a '-'/'+' string, mu_1 leftmost."""
    return "".join("+" if bits >> j & 1 else "-" for j in range(n))


def state_from_string(s):
    bits = 0
    for j, ch in enumerate(s):
        if ch == "+":
            bits |= 1 << j
        elif ch != "-":
            raise ValueError(f"bad configuration string {s!r}")
    return bits


def shift_bits(bits, n):
    """Cyclic left shift, |mu_1 mu_2 ... mu_N> -> |mu_2 ... mu_N mu_1>."""
    return (bits >> 1) | ((bits & 1) << (n - 1))


def flip_bits(bits, n):
    return ~bits & ((1 << n) - 1)


def shift(state):
    return SpinState(shift_bits(state.bits, state.n), state.n)


def spin_flip(state):
    return SpinState(flip_bits(state.bits, state.n), state.n)


def up_count(bits):
    return bin(bits).count("1")


def _string_key(bits, n):
    # integer comparing like the mu_1-leftmost configuration string
    key = 0
    for j in range(n):
        key = (key << 1) | (bits >> j & 1)
    return key


def canonical_representative(bits, n):
    """Orbit member minimizing the configuration string, plus the orbit size."""
    best = bits
    best_key = _string_key(bits, n)
    size = 1
    b = shift_bits(bits, n)
    while b != bits:
        k = _string_key(b, n)
        if k < best_key:
            best, best_key = b, k
        size += 1
        b = shift_bits(b, n)
    return best, size


@dataclass
class SectorBasis:
    """Cyclic orbits of one parity sector, ordered by representative string."""
    n: int
    parity: str
    orbits: list = field(default_factory=list)   # (representative bits, orbit size)
    index: dict = field(default_factory=dict)    # any member bits -> orbit position

    @property
    def norbits(self):
        return len(self.orbits)

    @property
    def reference_index(self):
        """Orbit of the single-down configuration -++...+ (all-plus for n=1)."""
        if self.n == 1:
            ref = 0 if self.parity == "even" else 1
        elif self.parity == "even":
            ref = (1 << self.n) - 2
        else:
            ref = 1  # spin-flipped counterpart +--...-
        return self.index[ref]


def enumerate_sector(n, parity):
    """All states of the given up-spin parity, grouped into cyclic orbits."""
    _check_n(n)
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    want = 0 if parity == "even" else 1
    reps = {}
    for s in range(1 << n):
        if up_count(s) & 1 != want:
            continue
        rep, size = canonical_representative(s, n)
        if rep not in reps:
            reps[rep] = size
    order = sorted(reps, key=lambda b: _string_key(b, n))
    basis = SectorBasis(n=n, parity=parity,
                        orbits=[(rep, reps[rep]) for rep in order])
    for i, (rep, _) in enumerate(basis.orbits):
        b = rep
        while True:
            basis.index[b] = i
            b = shift_bits(b, n)
            if b == rep:
                break
    return basis


_SQ2 = np.sqrt(2.0)
# single-spin pi/2 rotations (1 + i sigma)/sqrt(2), basis order (down, up)
_SINGLE_ROT = {
    "x": np.array([[1, 1j], [1j, 1]]) / _SQ2,
    "y": np.array([[1, -1], [1, 1]]) / _SQ2,
    "z": np.array([[1 - 1j, 0], [0, 1 + 1j]]) / _SQ2,
}


def rotation_matrix(axis, n):
    """Whole-chain pi/2 rotation about a coordinate axis as a dense matrix."""
    _check_n(n)
    if n > 13:
        raise ValueError("dense rotation matrices are limited to n <= 13")
    if axis not in _SINGLE_ROT:
        raise ValueError(f"axis must be one of 'x', 'y', 'z', got {axis!r}")
    r = _SINGLE_ROT[axis]
    out = np.array([[1.0 + 0j]])
    for _ in range(n):
        out = np.kron(out, r)
    return out


@lru_cache(maxsize=None)
def shift_matrix(n):
    """Dense one-site left-shift operator (for numeric cross-checks)."""
    _check_n(n)
    dim = 1 << n
    m = np.zeros((dim, dim))
    for s in range(dim):
        m[shift_bits(s, n), s] = 1.0
    return m
