"""Closed-form equal-degree pairs ``a w1 + b w2`` for the classical families."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .dimension import Weight, balanced_product, decimal_string, weyl_dim
from .pell import iter_star_solutions
from .rootdata import LieType, build_datum
from .search import canonical_form


@dataclass(frozen=True)
class FamilyWitness:
    type: LieType
    lam: Weight
    mu: Weight
    degree: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "type": str(self.type),
                "lambda": list(self.lam),
                "mu": list(self.mu),
                "degree": decimal_string(self.degree),
            },
            separators=(",", ":"),
        )

    def check(self) -> list[str]:
        """Recompute both degrees with the Weyl formula and compare orbits."""
        datum = build_datum([self.type])
        problems = []
        for name, w in (("lambda", self.lam), ("mu", self.mu)):
            got = weyl_dim(datum, w)
            if got != self.degree:
                problems.append(f"{self.type}: dim V({name}) = {got} != {self.degree}")
        if canonical_form(datum, self.lam) == canonical_form(datum, self.mu):
            problems.append(f"{self.type}: lambda and mu are related by a diagram automorphism")
        return problems


def _weight(l: int, a: int, b: int) -> Weight:
    return (a, b) + (0,) * (l - 2)


def _prod(lo: int, hi: int, power: int = 1) -> int:
    return balanced_product([k**power for k in range(lo, hi + 1)])


def _exact(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise AssertionError(f"closed form {num}/{den} is not an integer")
    return q


def family_A(l: int) -> FamilyWitness:
    """``(l-1) w2`` and ``w1 + (l-2) w2`` in type A_l."""
    if l < 3:
        raise ValueError(
            f"A_{l}: need l >= 3; for l = 2 the two weights are swapped by the graph automorphism"
        )
    deg = _exact((2 * l - 1) * _prod(l + 1, 2 * l - 2, 2), factorial(l - 1) ** 2)
    return FamilyWitness(LieType("A", l), _weight(l, 0, l - 1), _weight(l, 1, l - 2), deg)


def family_B(l: int) -> FamilyWitness:
    """``(2l-2) w2`` and ``w1 + (2l-3) w2`` in type B_l."""
    if l < 3:
        raise ValueError(f"B_{l}: need l >= 3")
    num = 3 * (4 * l - 5) * (6 * l - 5) * (6 * l - 7) * _prod(2 * l, 4 * l - 6, 2)
    deg = _exact(num, factorial(2 * l - 3) ** 2)
    return FamilyWitness(LieType("B", l), _weight(l, 0, 2 * l - 2), _weight(l, 1, 2 * l - 3), deg)


def family_D(l: int) -> FamilyWitness:
    """``(2l-3) w2`` and ``w1 + (2l-4) w2`` in type D_l."""
    if l < 4:
        raise ValueError(f"D_{l}: need l >= 4")
    num = 3 * (3 * l - 4) * (3 * l - 5) * (4 * l - 7) * _prod(2 * l - 1, 4 * l - 8, 2)
    deg = _exact(num, (l - 2) ** 2 * factorial(2 * l - 5) ** 2)
    return FamilyWitness(LieType("D", l), _weight(l, 0, 2 * l - 3), _weight(l, 1, 2 * l - 4), deg)


def ratio_C(a: int, b: int, l: int) -> Fraction:
    """``dim V(a w1 + b w2) / dim V((a-2) w1 + (b+1) w2)`` in type C_l."""
    if l < 3 or a < 3 or b < 0:
        raise ValueError(f"ratio_C needs l >= 3, a >= 3, b >= 0; got a={a}, b={b}, l={l}")
    return Fraction(
        (a + 1) * (b + 1) * (a + b + 2 * l - 2),
        (a - 1) * (a + b + 1) * (b + 2 * l - 2),
    )


def degree_C(a: int, b: int, l: int) -> int:
    """``dim V(a w1 + b w2)`` in type C_l from the closed product formula."""
    if l < 3 or a < 0 or b < 0:
        raise ValueError(f"degree_C needs l >= 3, a, b >= 0; got a={a}, b={b}, l={l}")
    num = (
        (a + 1)
        * (a + 2 * b + 2 * l - 1)
        * _prod(a + b + 2, a + b + 2 * l - 2)
        * _prod(b + 1, b + 2 * l - 3)
    )
    return _exact(num, factorial(2 * l - 1) * factorial(2 * l - 3))


def family_C(l: int, count: int = 1) -> list[FamilyWitness]:
    """Witnesses from the first ``count`` scaled Pell solutions for C_l."""
    if count < 1:
        raise ValueError("count must be at least 1")
    out = []
    for sol in iter_star_solutions(l):
        a, b = sol.a, sol.b
        if ratio_C(a, b, l) != 1:
            raise AssertionError(f"C_{l}: (a, b) = ({a}, {b}) does not balance the degree ratio")
        out.append(
            FamilyWitness(LieType("C", l), _weight(l, a, b), _weight(l, a - 2, b + 1), degree_C(a, b, l))
        )
        if len(out) == count:
            break
    return out


def family(name: str, l: int, count: int = 1) -> list[FamilyWitness]:
    name = name.upper()
    if name == "C":
        return family_C(l, count)
    makers = {"A": family_A, "B": family_B, "D": family_D}
    if name not in makers:
        raise ValueError(f"no closed-form family for type {name!r}")
    return [makers[name](l)]
