"""Exact action of the anisotropic chain Hamiltonian H(alpha).

Couplings are (1+alpha, 1-alpha, (alpha^2-1)/2), which keeps the product
identity JxJy + JyJz + JzJx = 0 and the scale Jx + Jy = 2.  In the sigma-z
product basis the pair term acts as a diagonal neighbor correlation plus a
double flip: amplitude -1 for an antiparallel neighboring pair, -alpha for a
parallel one.
"""

from dataclasses import dataclass
from fractions import Fraction

from .basis import SectorBasis, shift_bits, up_count


@dataclass(frozen=True)
class CouplingConstants:
    jx: Fraction
    jy: Fraction
    jz: Fraction


def couplings(alpha):
    a = Fraction(alpha)
    return CouplingConstants(1 + a, 1 - a, (a * a - 1) / 2)


def ground_energy(alpha, n):
    """The distinguished eigenvalue -(n/4)(3 + alpha^2) for odd n."""
    if n % 2 == 0:
        raise ValueError("chain length must be odd")
    a = Fraction(alpha)
    return -Fraction(n, 4) * (3 + a * a)


def neighbor_correlation(bits, n):
    """Sum over j of mu_j mu_{j+1}, periodic."""
    if n == 1:
        return 1
    return n - 2 * up_count(bits ^ shift_bits(bits, n))


def apply(alpha, v, n):
    """H(alpha) applied to a vector over the full 2^n basis, exactly."""
    if len(v) != 1 << n:
        raise ValueError("vector length does not match the chain length")
    a = Fraction(alpha)
    jz = (a * a - 1) / 2
    if n == 1:
        # both pair operators act on the same site, so H is scalar
        e = -Fraction(1, 2) * (2 + jz)
        return [e * x for x in v]
    out = [Fraction(0)] * len(v)
    half_jz = jz / 2
    for s, vs in enumerate(v):
        if vs == 0:
            continue
        out[s] += -half_jz * neighbor_correlation(s, n) * vs
        for j in range(n):
            k = (j + 1) % n
            mask = (1 << j) | (1 << k)
            parallel = (s >> j & 1) == (s >> k & 1)
            amp = -a if parallel else Fraction(-1)
            out[s ^ mask] += amp * vs
    return out


@dataclass
class SectorMatrix:
    """Sparse rows of H(alpha) - E(alpha) on the shift-invariant block."""
    basis: SectorBasis
    rows: list       # per orbit: list of (column orbit, coefficient)
    alpha: Fraction

    @property
    def size(self):
        return len(self.rows)


def _reduced_rows(basis, alpha, diag_shift):
    """Rows of H + diag_shift*Id restricted to orbit-constant vectors."""
    n = basis.n
    a = Fraction(alpha)
    half_jz = (a * a - 1) / 4
    rows = []
    for rep, _size in basis.orbits:
        acc = {}
        if n == 1:
            diag = -Fraction(1, 2) * (2 + 2 * half_jz) + diag_shift
            rows.append([(basis.index[rep], diag)] if diag else [])
            continue
        diag = -half_jz * neighbor_correlation(rep, n) + diag_shift
        acc[basis.index[rep]] = diag
        for j in range(n):
            k = (j + 1) % n
            mask = (1 << j) | (1 << k)
            parallel = (rep >> j & 1) == (rep >> k & 1)
            amp = -a if parallel else Fraction(-1)
            col = basis.index[rep ^ mask]
            acc[col] = acc.get(col, Fraction(0)) + amp
        rows.append(sorted((c, x) for c, x in acc.items() if x != 0))
    return rows


def reduced_matrix(alpha, basis):
    """H(alpha) - E(alpha) on the span of orbit-symmetrized vectors."""
    a = Fraction(alpha)
    return SectorMatrix(basis=basis,
                        rows=_reduced_rows(basis, a, -ground_energy(a, basis.n)),
                        alpha=a)


def reduced_rows_scaled(basis, alpha):
    """Integer rows of 4*(H(alpha) - E(alpha)) for an integer sample alpha.

    Scaling by 4 clears the only denominators (halves and quarters from Jz
    and E), which keeps the modular solver in integer arithmetic.
    """
    alpha = int(alpha)
    m = reduced_matrix(alpha, basis)
    out = []
    for row in m.rows:
        irow = []
        for col, x in row:
            y = 4 * x
            assert y.denominator == 1
            irow.append((col, int(y)))
        out.append(irow)
    return out
