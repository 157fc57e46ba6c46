"""Continued fractions of square roots and the Pell equations behind type C.

Equal degrees ``dim V(a w1 + b w2) = dim V((a-2) w1 + (b+1) w2)`` in type C_l
correspond to solutions of

    c^2 - (4l - 5) a^2 = (2l - 3)^2,        b = (c + 1 - a - 2l) / 2,

and scaling solutions of ``x^2 - (4l-5) y^2 = 1`` by ``2l - 3`` produces
infinitely many of them.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import count as _count
from math import isqrt
from typing import Iterator

from .dimension import decimal_string


@dataclass(frozen=True)
class ContinuedFraction:
    d: int
    a0: int
    period: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.period)

    def term(self, k: int) -> int:
        return self.a0 if k == 0 else self.period[(k - 1) % self.r]


@dataclass(frozen=True)
class PellSolution:
    x: int
    y: int
    d: int

    def __post_init__(self) -> None:
        if self.x * self.x - self.d * self.y * self.y != 1:
            raise AssertionError(f"({self.x}, {self.y}) does not solve x^2 - {self.d} y^2 = 1")


@dataclass(frozen=True)
class StarSolution:
    l: int
    c: int
    a: int
    b: int

    def __post_init__(self) -> None:
        l, c, a, b = self.l, self.c, self.a, self.b
        if c * c - (4 * l - 5) * a * a != (2 * l - 3) ** 2:
            raise AssertionError(f"(c, a) = ({c}, {a}) does not solve the equation for l = {l}")
        if (c + a) % 2 != 1:
            raise AssertionError(f"c = {c} and a = {a} have the same parity")
        if 2 * b != c + 1 - a - 2 * l or b < 0:
            raise AssertionError(f"b = {b} inconsistent with (c, a, l) = ({c}, {a}, {l})")

    @classmethod
    def from_ca(cls, l: int, c: int, a: int) -> "StarSolution":
        # "+" branch of the quadratic in b; the "-" branch is negative for a, l >= 3
        return cls(l, c, a, (c + 1 - a - 2 * l) // 2)

    def to_json(self) -> str:
        return json.dumps(
            {"l": self.l, "c": decimal_string(self.c), "a": decimal_string(self.a), "b": decimal_string(self.b)},
            separators=(",", ":"),
        )


def _check_nonsquare(d: int) -> int:
    if d < 2:
        raise ValueError(f"d must be at least 2, got {d}")
    a0 = isqrt(d)
    if a0 * a0 == d:
        raise ValueError(f"{d} is a perfect square")
    return a0


def cf_sqrt(d: int) -> ContinuedFraction:
    """One period of the continued fraction of ``sqrt(d)``.

    >>> cf_sqrt(7).period
    (1, 1, 1, 4)
    """
    a0 = _check_nonsquare(d)
    m, q, a = 0, 1, a0
    period = []
    while a != 2 * a0:
        m = q * a - m
        q = (d - m * m) // q
        a = (a0 + m) // q
        period.append(a)
    return ContinuedFraction(d, a0, tuple(period))


def convergent(cf: ContinuedFraction, m: int) -> tuple[int, int]:
    """Numerator and denominator of the ``m``-th convergent (``m = 0`` gives ``a0/1``)."""
    if m < 0:
        raise ValueError("convergent index must be non-negative")
    p_prev, p = 1, cf.a0
    q_prev, q = 0, 1
    for k in range(1, m + 1):
        t = cf.term(k)
        p_prev, p = p, t * p + p_prev
        q_prev, q = q, t * q + q_prev
    return p, q


def fundamental_pell(d: int) -> PellSolution:
    """Smallest positive solution of ``x^2 - d y^2 = 1``."""
    cf = cf_sqrt(d)
    m = cf.r - 1 if cf.r % 2 == 0 else 2 * cf.r - 1
    x, y = convergent(cf, m)
    return PellSolution(x, y, d)


def pell_power(fund: PellSolution, k: int) -> PellSolution:
    """``x_k + y_k sqrt(d) = (x_1 + y_1 sqrt(d))^k``."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    x1, y1, d = fund.x, fund.y, fund.d
    x, y = x1, y1
    for _ in range(k - 1):
        x, y = x1 * x + d * y1 * y, x1 * y + y1 * x
    return PellSolution(x, y, d)


def iter_star_solutions(l: int) -> Iterator[StarSolution]:
    """Endless stream of the scaled solutions with ``a >= 3``, increasing in ``a``."""
    if l < 3:
        raise ValueError(f"the type C construction needs l >= 3, got {l}")
    d, s = 4 * l - 5, 2 * l - 3
    fund = fundamental_pell(d)
    x, y = fund.x, fund.y
    for _ in _count():
        c, a = s * x, s * y
        if a >= 3:
            yield StarSolution.from_ca(l, c, a)
        x, y = fund.x * x + d * fund.y * y, fund.x * y + fund.y * x


def star_solutions(l: int, count: int) -> list[StarSolution]:
    if count < 1:
        raise ValueError("count must be at least 1")
    out = []
    for sol in iter_star_solutions(l):
        out.append(sol)
        if len(out) == count:
            return out
    return out  # pragma: no cover


def _scan(l: int, lo: int, hi: int) -> list[StarSolution]:
    d, s2 = 4 * l - 5, (2 * l - 3) ** 2
    hits = []
    for a in range(max(lo, 3), hi + 1):
        n = d * a * a + s2
        c = isqrt(n)
        if c * c == n:
            hits.append(StarSolution.from_ca(l, c, a))
    return hits


def brute_force_star(l: int, a_max: int, workers: int = 1) -> list[StarSolution]:
    """Every solution with ``3 <= a <= a_max``, found by testing each ``a``.

    Catches sporadic solutions outside the scaled Pell family. ``workers > 1``
    splits the range over processes; the result is identical.
    """
    if l < 3:
        raise ValueError(f"the type C construction needs l >= 3, got {l}")
    if a_max < 1:
        raise ValueError("a_max must be at least 1")
    if workers <= 1 or a_max < 10000:
        return _scan(l, 1, a_max)
    step = -(-a_max // workers)
    bounds = [(lo, min(lo + step - 1, a_max)) for lo in range(1, a_max + 1, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_scan, [l] * len(bounds), *zip(*bounds))
        return [s for part in parts for s in part]
