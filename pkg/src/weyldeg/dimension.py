"""Exact Weyl dimension formula.

    dim V(lambda) = prod <lambda + rho, b> / prod <rho, b>

over the positive coroots ``b``. Weights are dense coordinate vectors in the
fundamental-weight basis; ``rho`` is the all-ones vector. All arithmetic is on
Python integers, so degrees of any size come out exact.
"""
from __future__ import annotations

from typing import Sequence

from .rootdata import Component, RootDatum, build_datum

Weight = tuple[int, ...]


def balanced_product(factors: Sequence[int]) -> int:
    """Product of integers by pairwise splitting; much faster than a left fold for big results."""
    n = len(factors)
    if n == 0:
        return 1
    if n <= 16:
        out = 1
        for f in factors:
            out *= f
        return out
    mid = n // 2
    return balanced_product(factors[:mid]) * balanced_product(factors[mid:])


def pairing_plus_rho(weight: Sequence[int], coroot: Sequence[int]) -> int:
    """``<lambda + rho, coroot> = sum (a_i + 1) b_i``."""
    if len(weight) != len(coroot):
        raise ValueError(f"length mismatch: weight {len(weight)}, coroot {len(coroot)}")
    return sum((a + 1) * b for a, b in zip(weight, coroot))


def _component_dim(comp: Component, weight: Sequence[int]) -> int:
    if any(a < 0 for a in weight):
        raise ValueError(f"weight {tuple(weight)} is not dominant")
    pairings = list(comp.heights)
    for i, a in enumerate(weight):
        if a:
            for k, b in comp.columns[i]:
                pairings[k] += a * b
    num = balanced_product(pairings)
    den = comp.rho_product
    q, r = divmod(num, den)
    if r:
        raise AssertionError(f"Weyl quotient not integral for {comp.type}: coroot table corrupt")
    return q


def weyl_dim(datum: RootDatum | str, weight: Sequence[int]) -> int:
    """Degree of the irreducible representation with highest weight ``weight``.

    >>> weyl_dim("A2", (1, 2))
    15
    """
    if isinstance(datum, str):
        datum = build_datum(datum)
    out = 1
    for comp, part in datum.split(weight):
        out *= _component_dim(comp, part)
    return out


def scaled_weight(weight: Sequence[int], k: int) -> Weight:
    """The weight ``k(lambda + rho) - rho``; its degree is ``dim V(lambda) * k**N``."""
    if k < 1:
        raise ValueError(f"scale factor must be a positive integer, got {k}")
    return tuple(k * a + k - 1 for a in weight)


def scaled_pair_family(
    datum: RootDatum | str, lam: Sequence[int], mu: Sequence[int], k_max: int
) -> list[tuple[Weight, Weight, int]]:
    """Scale one equal-degree pair into the family ``k = 1..k_max``."""
    if isinstance(datum, str):
        datum = build_datum(datum)
    d = weyl_dim(datum, lam)
    if weyl_dim(datum, mu) != d:
        raise ValueError(f"{tuple(lam)} and {tuple(mu)} do not have the same degree")
    n = datum.N
    return [
        (scaled_weight(lam, k), scaled_weight(mu, k), d * k**n) for k in range(1, k_max + 1)
    ]


def decimal_string(n: int) -> str:
    """``str(n)`` without tripping the interpreter's int-to-str digit limit."""
    try:
        return str(n)
    except ValueError:
        if n < 0:
            return "-" + decimal_string(-n)
        k = digit_count(n) // 2
        hi, lo = divmod(n, 10**k)
        return decimal_string(hi) + decimal_string(lo).zfill(k)


def digit_count(d: int) -> int:
    """Number of decimal digits of a positive integer."""
    if d < 1:
        raise ValueError("degree must be positive")
    # bit_length * log10(2) is within one of the answer; fix up exactly
    n = max(1, int((d.bit_length() - 1) * 0.30102999566398120))
    while 10**n <= d:
        n += 1
    while n > 1 and 10 ** (n - 1) > d:
        n -= 1
    return n
