"""Reproduction bundles behind ``weyldeg verify``.

Each bundle returns a list of :class:`Check`; a bundle passes when every
check does.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .dimension import digit_count, weyl_dim
from .families import degree_C, family_A, family_B, family_D, ratio_C
from .pell import brute_force_star, cf_sqrt, star_solutions
from .rootdata import build_datum
from .search import PROP2_TABLE, e6_graph_remark, verify_prop2

# values quoted for the C_159 case
L159_PERIOD = 48
L159_A = 613975804336172576474505
L159_B = 7404460209629201092363289
L159_DIGITS = 15728
L159_SPORADIC = (87, 902)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tail = f": {self.detail}" if self.detail else ""
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}{tail}"


def _expect(name: str, got: object, want: object) -> Check:
    return Check(name, got == want, "" if got == want else f"got {got}, expected {want}")


def prop2_bundle(extended: bool = False) -> list[Check]:
    checks = []
    for row in PROP2_TABLE:
        scan = not row.extended or extended
        rep = verify_prop2(row, bounded=scan, extended=extended)
        label = f"prop2 {row.type} degree {row.degree}" + (" + minimality" if scan else "")
        checks.append(Check(label, rep.ok, "; ".join(rep.mismatches)))
    problems = e6_graph_remark()
    checks.append(Check("prop2 E6 graph automorphism remark", not problems, "; ".join(problems)))
    return checks


def thm3_bundle(max_rank: int = 12) -> list[Check]:
    checks = []
    for maker, lo in ((family_A, 3), (family_B, 3), (family_D, 4)):
        for l in range(lo, max_rank + 1):
            w = maker(l)
            problems = w.check()
            checks.append(Check(f"thm3 {w.type} closed form = Weyl formula", not problems, "; ".join(problems)))
    sol = star_solutions(3, 1)[0]
    checks.append(_expect("thm3 C3 first scaled solution (c,a,b)", (sol.c, sol.a, sol.b), (24, 9, 5)))
    c3 = build_datum("C3")
    checks.append(_expect("thm3 C3 dim V(9,5,0)", weyl_dim(c3, (9, 5, 0)), 548352))
    checks.append(_expect("thm3 C3 dim V(7,6,0)", weyl_dim(c3, (7, 6, 0)), 548352))
    checks.append(_expect("thm3 C3 closed form at (9,5)", degree_C(9, 5, 3), 548352))
    checks.append(_expect("thm3 C3 ratio at (9,5)", ratio_C(9, 5, 3), 1))
    return checks


def remark159_bundle(log: Callable[[str], None] | None = None) -> list[Check]:
    say = log or (lambda msg: None)
    checks = [_expect("remark159 period of sqrt(631)", cf_sqrt(631).r, L159_PERIOD)]
    sol = star_solutions(159, 1)[0]
    checks.append(_expect("remark159 first scaled (a,b)", (sol.a, sol.b), (L159_A, L159_B)))
    say("building C159 coroots (25281 of them)")
    c159 = build_datum("C159")
    pad = (0,) * 157
    big = weyl_dim(c159, (L159_A, L159_B) + pad)
    checks.append(_expect("remark159 closed form = Weyl formula", degree_C(L159_A, L159_B, 159), big))
    checks.append(
        _expect("remark159 equal degree partner", weyl_dim(c159, (L159_A - 2, L159_B + 1) + pad), big)
    )
    checks.append(_expect("remark159 decimal digits of the degree", digit_count(big), L159_DIGITS))
    hits = [(s.a, s.b) for s in brute_force_star(159, 100)]
    checks.append(Check("remark159 brute force finds (87,902)", L159_SPORADIC in hits, f"hits {hits}"))
    a, b = L159_SPORADIC
    checks.append(
        _expect(
            "remark159 dim V(87,902) = dim V(85,903)",
            weyl_dim(c159, (a, b) + pad) == weyl_dim(c159, (a - 2, b + 1) + pad),
            True,
        )
    )
    return checks


BUNDLES = {
    "prop2": prop2_bundle,
    "thm3": thm3_bundle,
    "remark159": remark159_bundle,
}
