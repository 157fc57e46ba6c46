"""Independent reference computations used by the tests.

None of these go through the package's own product/column machinery or its
continued-fraction code.
"""
from fractions import Fraction
from math import isqrt


def naive_dim(coroots, weight):
    """Weyl formula as a plain product of fractions, one factor per coroot."""
    out = Fraction(1)
    for b in coroots:
        num = sum((a + 1) * x for a, x in zip(weight, b))
        den = sum(b)
        out *= Fraction(num, den)
    assert out.denominator == 1
    return int(out)


def a2_dim(a, b):
    return (a + 1) * (b + 1) * (a + b + 2) // 2


def pell_brute(d, y_max):
    """Smallest y in [1, y_max] with d*y^2 + 1 a square, or None."""
    for y in range(1, y_max + 1):
        n = d * y * y + 1
        x = isqrt(n)
        if x * x == n:
            return x, y
    return None


def pell_stern_brocot(d, max_steps=10**6):
    """First fraction p/q on the Stern-Brocot path to sqrt(d) with p^2 - d q^2 = 1.

    All Pell solutions are convergents of sqrt(d), and every convergent lies on
    this path, which visits denominators in increasing order.
    """
    lo_p, lo_q, hi_p, hi_q = 0, 1, 1, 0
    for _ in range(max_steps):
        p, q = lo_p + hi_p, lo_q + hi_q
        if p * p - d * q * q == 1:
            return p, q
        if p * p < d * q * q:
            lo_p, lo_q = p, q
        else:
            hi_p, hi_q = p, q
    raise RuntimeError("step budget exhausted")


def box_enumeration(weyl_dim, datum, rank, bound, max_degree):
    """Every weight with coordinates <= bound and degree <= max_degree."""
    from itertools import product

    out = {}
    for w in product(range(bound + 1), repeat=rank):
        d = weyl_dim(datum, w)
        if d <= max_degree:
            out[w] = d
    return out
