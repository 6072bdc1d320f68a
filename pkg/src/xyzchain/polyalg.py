"""Exact polynomial arithmetic over the rationals.

Polynomials are dense coefficient lists in ascending power order, with int or
Fraction coefficients.  Degrees stay small (below ~60 for chain lengths up to
19), so plain Python lists are perfectly adequate.
"""

from fractions import Fraction
from math import gcd


def trim(c):
    """Drop trailing zero coefficients (highest powers)."""
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def degree(c):
    """Degree of the polynomial, -1 for the zero polynomial."""
    c = trim(c)
    return len(c) - 1


def add(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(n)])


def sub(a, b):
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                 for i in range(n)])


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return trim(out)


def scale(a, s):
    if s == 0:
        return []
    return trim([ai * s for ai in a])


def evaluate(c, x):
    """Horner evaluation; exact when c and x are exact."""
    acc = 0
    for ci in reversed(c):
        acc = acc * x + ci
    return acc


def divmod_poly(a, b):
    """Quotient and remainder of a by b over the rationals."""
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(x) for x in trim(a)]
    lead = Fraction(b[-1])
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        coef = a[-1] / lead
        k = len(a) - len(b)
        q[k] = coef
        for i, bi in enumerate(b):
            a[i + k] -= coef * bi
        a = trim(a)
    return trim(q), a


def exact_div(a, b):
    """Divide a by b, raising if the division is not exact."""
    q, r = divmod_poly(a, b)
    if r:
        raise ValueError("polynomial division is not exact")
    return q


def monic(a):
    a = trim(a)
    if not a:
        return a
    lead = a[-1]
    return [Fraction(x, 1) / lead for x in a]


def poly_gcd(a, b):
    """Monic gcd over the rationals (Euclid)."""
    a, b = trim(a), trim(b)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    return monic(a)


def poly_lcm(a, b):
    a, b = trim(a), trim(b)
    if not a or not b:
        return []
    g = poly_gcd(a, b)
    return monic(mul(a, exact_div(b, g)))


def content(coeffs):
    """Gcd of the integer coefficients (0 for the zero polynomial)."""
    g = 0
    for c in coeffs:
        g = gcd(g, int(c))
    return g


def clear_denominators(coeffs):
    """Smallest positive integer multiplier making all coefficients integer."""
    m = 1
    for c in coeffs:
        c = Fraction(c)
        m = m * c.denominator // gcd(m, c.denominator)
    return m


def interpolate(xs, ys):
    """Newton interpolation through distinct nodes; exact over Fractions."""
    n = len(xs)
    assert len(ys) == n
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (Fraction(xs[i]) - Fraction(xs[i - j]))
    # expand from the Newton form
    poly = []
    for i in range(n - 1, -1, -1):
        poly = add(mul(poly, [-Fraction(xs[i]), Fraction(1)]), [coef[i]])
    return poly


def rational_interpolate(xs, ys, num_deg, den_deg):
    """Rational function through the nodes with the given degree bounds.

    Uses the extended-Euclid formulation of Cauchy interpolation: run the
    Euclidean algorithm on (prod(x - x_j), full interpolant) until the
    remainder degree drops to num_deg; the Bezout cofactor is the denominator.
    Returns (num, den) with den monic, reduced to lowest terms, or None when
    no rational function with these bounds passes through all the nodes.
    """
    assert len(xs) == len(ys) >= num_deg + den_deg + 2
    node_poly = [Fraction(1)]
    for x in xs:
        node_poly = mul(node_poly, [-Fraction(x), Fraction(1)])
    f = interpolate(xs, ys)
    r0, r1 = node_poly, f
    t0, t1 = [], [Fraction(1)]
    while degree(r1) > num_deg:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        t0, t1 = t1, sub(t0, mul(q, t1))
    if degree(t1) > den_deg:
        return None
    g = poly_gcd(r1, t1)
    if degree(g) > 0:
        r1 = exact_div(r1, g)
        t1 = exact_div(t1, g)
    if not t1:
        return None
    lead = t1[-1]
    num = [Fraction(c) / lead for c in r1]
    den = [Fraction(c) / lead for c in t1]
    for x, y in zip(xs, ys):
        dv = evaluate(den, Fraction(x))
        if dv == 0 or evaluate(num, Fraction(x)) != Fraction(y) * dv:
            return None
    return num, den


def mobius_numerator(coeffs, bound):
    """(t - 1)^bound * p((t + 3)/(t - 1)) as a polynomial in t.

    bound must be at least deg(p); the result is the cross-multiplied form of
    composing p with the involution t -> (t + 3)/(t - 1).
    """
    coeffs = trim(coeffs)
    if bound < len(coeffs) - 1:
        raise ValueError("bound below the polynomial degree")
    up = [Fraction(3), Fraction(1)]    # t + 3
    down = [Fraction(-1), Fraction(1)]  # t - 1
    out = []
    for i in range(bound + 1):
        ci = coeffs[i] if i < len(coeffs) else 0
        if ci == 0:
            continue
        term = [Fraction(ci)]
        for _ in range(i):
            term = mul(term, up)
        for _ in range(bound - i):
            term = mul(term, down)
        out = add(out, term)
    return out
