"""Bounded enumeration of dominant weights and equal-degree coincidences."""
from __future__ import annotations

import json
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .dimension import Weight, decimal_string, weyl_dim
from .rootdata import RootDatum, act, build_datum

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchConfig:
    max_degree: int
    modulo_automorphisms: bool = True

    def __post_init__(self) -> None:
        if self.max_degree < 1:
            raise ValueError("max_degree must be at least 1")


@dataclass(frozen=True)
class CoincidenceGroup:
    degree: int
    weights: tuple[Weight, ...]

    def to_json(self) -> str:
        return json.dumps(
            {"degree": decimal_string(self.degree), "weights": [list(w) for w in self.weights]},
            separators=(",", ":"),
        )


def _datum(d: RootDatum | str) -> RootDatum:
    return build_datum(d) if isinstance(d, str) else d


def enumerate_dominant(
    datum: RootDatum | str,
    max_degree: int,
    progress: Callable[[int], None] | None = None,
) -> Iterator[tuple[Weight, int]]:
    """Yield every dominant weight of degree ``<= max_degree`` with its degree, in lex order.

    Depth-first over coordinates. Raising any coordinate strictly raises the
    degree, so a branch is cut as soon as the bound is exceeded.
    """
    datum = _datum(datum)
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    r = datum.total_rank
    w = [0] * r
    count = 0

    def walk(i: int) -> Iterator[tuple[Weight, int]]:
        nonlocal count
        while True:
            d = weyl_dim(datum, w)
            if d > max_degree:
                break
            if i == r - 1:
                count += 1
                if progress is not None and count % 10000 == 0:
                    progress(count)
                yield tuple(w), d
            else:
                yield from walk(i + 1)
            w[i] += 1
        w[i] = 0

    yield from walk(0)


def orbit(datum: RootDatum | str, weight: Sequence[int]) -> set[Weight]:
    datum = _datum(datum)
    return {act(p, weight) for p in datum.automorphisms}


def canonical_form(datum: RootDatum | str, weight: Sequence[int]) -> Weight:
    """Representative of the automorphism orbit of ``weight``: its lexicographic maximum.

    >>> canonical_form("E6", (0, 0, 0, 0, 0, 2))
    (2, 0, 0, 0, 0, 0)
    """
    return max(orbit(datum, weight))


def find_coincidences(
    datum: RootDatum | str,
    config: SearchConfig,
    progress: Callable[[int], None] | None = None,
) -> list[CoincidenceGroup]:
    """All degrees ``<= config.max_degree`` shared by at least two (orbits of) weights."""
    datum = _datum(datum)
    by_degree: dict[int, set[Weight]] = defaultdict(set)
    for w, d in enumerate_dominant(datum, config.max_degree, progress=progress):
        by_degree[d].add(canonical_form(datum, w) if config.modulo_automorphisms else w)
    return [
        CoincidenceGroup(d, tuple(sorted(ws)))
        for d, ws in sorted(by_degree.items())
        if len(ws) >= 2
    ]


@dataclass(frozen=True)
class Prop2Row:
    type: str
    lam: Weight
    mu: Weight
    degree: int
    # long scans, only run on request
    extended: bool = False


PROP2_TABLE: tuple[Prop2Row, ...] = (
    Prop2Row("A2", (1, 2), (0, 4), 15),
    Prop2Row("B2", (1, 2), (0, 4), 35),
    Prop2Row("G2", (2, 0), (0, 3), 77),
    Prop2Row("F4", (1, 0, 0, 1), (2, 0, 0, 0), 1053),
    Prop2Row("E6", (2, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), 351),
    Prop2Row("E7", (0, 0, 0, 1, 1, 0, 0), (0, 0, 0, 0, 0, 2, 3), 1903725824, extended=True),
    Prop2Row("E8", (1, 0, 1, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0, 1, 1), 8634368000, extended=True),
)


def prop2_row(type_name: str) -> Prop2Row:
    for row in PROP2_TABLE:
        if row.type == type_name:
            return row
    raise KeyError(f"no table row for {type_name}")


@dataclass
class Prop2Report:
    row: Prop2Row
    lam_degree: int
    mu_degree: int
    minimality_checked: bool = False
    smaller_groups: list[CoincidenceGroup] = field(default_factory=list)
    group_at_degree: CoincidenceGroup | None = None
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_prop2(
    row: Prop2Row | str,
    *,
    bounded: bool = False,
    extended: bool = False,
    progress: Callable[[int], None] | None = None,
) -> Prop2Report:
    """Recompute one table row; with ``bounded`` also scan all smaller degrees.

    The E7 and E8 rows are flagged ``extended``; their scans only run when
    ``extended=True`` is passed.
    """
    if isinstance(row, str):
        row = prop2_row(row)
    datum = build_datum(row.type)
    rep = Prop2Report(row, weyl_dim(datum, row.lam), weyl_dim(datum, row.mu))
    for name, got in (("lambda", rep.lam_degree), ("mu", rep.mu_degree)):
        if got != row.degree:
            rep.mismatches.append(f"{row.type}: dim V({name}) = {got}, table says {row.degree}")
    lam_c, mu_c = canonical_form(datum, row.lam), canonical_form(datum, row.mu)
    if lam_c == mu_c:
        rep.mismatches.append(f"{row.type}: {row.lam} and {row.mu} lie in one automorphism orbit")
    if bounded:
        if row.extended and not extended:
            raise ValueError(f"the {row.type} minimality scan is long-running; pass extended=True")
        log.info("scanning %s up to degree %d", row.type, row.degree)
        groups = find_coincidences(datum, SearchConfig(row.degree), progress=progress)
        rep.minimality_checked = True
        rep.smaller_groups = [g for g in groups if g.degree < row.degree]
        for g in rep.smaller_groups:
            rep.mismatches.append(f"{row.type}: smaller coincidence at degree {g.degree}: {g.weights}")
        at = [g for g in groups if g.degree == row.degree]
        rep.group_at_degree = at[0] if at else None
        if not at or not {lam_c, mu_c} <= set(at[0].weights):
            rep.mismatches.append(f"{row.type}: table pair missing from the group at degree {row.degree}")
    return rep


def e6_graph_remark() -> list[str]:
    """Check the E6 companion pair: ``2 omega_6`` and ``omega_5`` also have degree 351."""
    datum = build_datum("E6")
    problems = []
    two_w6, w5 = (0, 0, 0, 0, 0, 2), (0, 0, 0, 0, 1, 0)
    two_w1, w3 = (2, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)
    for w in (two_w6, w5):
        if weyl_dim(datum, w) != 351:
            problems.append(f"E6: dim V{w} = {weyl_dim(datum, w)}, expected 351")
    if canonical_form(datum, two_w6) != canonical_form(datum, two_w1):
        problems.append("E6: 2*omega_6 not in the orbit of 2*omega_1")
    if canonical_form(datum, w5) != canonical_form(datum, w3):
        problems.append("E6: omega_5 not in the orbit of omega_3")
    return problems
