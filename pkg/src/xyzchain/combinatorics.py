"""Product formulas for the two enumeration sequences tied to the low-order
coefficients of the all-minus component."""

from fractions import Fraction


def a_v(order):
    """Number of vertically symmetric alternating-sign matrices of odd order.

    a_v(2m+1) = 2^-m * prod_{i<m} (6i+4)!(2i+1)! / ((4i+3)!(4i+2)!).
    """
    if order % 2 == 0 or order < 1:
        raise ValueError(f"order must be a positive odd integer, got {order}")
    m = (order - 1) // 2
    acc = Fraction(1)
    for i in range(m):
        acc *= Fraction(_fact(6 * i + 4) * _fact(2 * i + 1),
                        _fact(4 * i + 3) * _fact(4 * i + 2))
    acc /= 2 ** m
    if acc.denominator != 1:
        raise ArithmeticError("product formula did not yield an integer")
    return int(acc)


def n_8(order):
    """Number of cyclically symmetric transpose complement plane partitions
    in a cube of even side `order`.

    n_8(2m) = prod_{i<m} (3i+1) * (6i)!(2i)! / ((4i+1)!(4i)!).
    """
    if order % 2 == 1 or order < 2:
        raise ValueError(f"order must be a positive even integer, got {order}")
    m = order // 2
    acc = Fraction(1)
    for i in range(m):
        acc *= Fraction((3 * i + 1) * _fact(6 * i) * _fact(2 * i),
                        _fact(4 * i + 1) * _fact(4 * i))
    if acc.denominator != 1:
        raise ArithmeticError("product formula did not yield an integer")
    return int(acc)


def _fact(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out
