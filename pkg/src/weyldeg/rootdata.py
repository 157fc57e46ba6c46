"""Root data of simple and semisimple simply-connected groups.

Everything here is indexed in Bourbaki node order (Planches I-IX). Nodes are
0-based internally, so Bourbaki node ``i`` lives at index ``i - 1``.

The only data the degree computations need is the list of positive coroots in
the basis of simple coroots. Coroots of type X are the roots of the dual root
system, so they are generated by the root-string closure applied to the dual system.
"""
from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]
Permutation = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        fam, rank = self.family, self.rank
        if fam in _MIN_RANK:
            if rank < _MIN_RANK[fam]:
                raise ValueError(
                    f"type {fam}{rank} is not valid: {fam}_l needs l >= {_MIN_RANK[fam]}"
                )
        elif fam in _EXCEPTIONAL_RANKS:
            if rank not in _EXCEPTIONAL_RANKS[fam]:
                allowed = ", ".join(f"{fam}{r}" for r in _EXCEPTIONAL_RANKS[fam])
                raise ValueError(f"type {fam}{rank} is not valid: only {allowed}")
        else:
            raise ValueError(f"unknown family {fam!r}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = _TYPE_RE.match(text)
        if not m:
            raise ValueError(f"cannot parse Lie type {text!r} (expected e.g. 'C159')")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def is_classical(self) -> bool:
        return self.family in "ABCD"


def _as_type(t: LieType | str) -> LieType:
    return LieType.parse(t) if isinstance(t, str) else t


def cartan_matrix(t: LieType | str) -> Matrix:
    """Cartan matrix ``c[i][j] = <alpha_i, alpha_j^vee>`` (Bourbaki's convention).

    A -2 or -3 at ``c[i][j]`` marks ``alpha_i`` as the long root of the bond.
    G2 follows the table data used for the degree coincidences: ``alpha_1``
    long, so ``V(omega_2)`` is the 7-dimensional module.
    """
    t = _as_type(t)
    n, fam = t.rank, t.family
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int) -> None:
        c[i][j] = c[j][i] = -1

    if fam in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if fam == "B":
            c[n - 2][n - 1] = -2
        elif fam == "C":
            c[n - 1][n - 2] = -2
    elif fam == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif fam == "E":
        bond(0, 2)
        bond(1, 3)
        for i in range(2, n - 1):
            bond(i, i + 1)
    elif fam == "F":
        bond(0, 1)
        bond(1, 2)
        bond(2, 3)
        c[1][2] = -2
    elif fam == "G":
        bond(0, 1)
        c[0][1] = -3
    return tuple(tuple(row) for row in c)


def _height_lex_key(v: Vector) -> tuple[int, Vector]:
    return (sum(v), v)


def generate_positive_roots(c: Matrix) -> list[Vector]:
    """All positive roots of the root system whose simple-root pairings are
    ``<beta, alpha_i^vee> = sum_j c[i][j] beta_j``.

    Roots are built height by height with the root-string criterion: for a
    root ``beta`` and a simple index ``i``, ``beta + alpha_i`` is a root iff
    ``p - <beta, alpha_i^vee> > 0`` where ``p`` is the length of the
    ``alpha_i``-string below ``beta``. Output is sorted by (height, lex).
    """
    n = len(c)
    # column j of c as (i, c[i][j]) pairs, so pairings only touch supp(beta)
    cols = [[(i, c[i][j]) for i in range(n) if c[i][j]] for j in range(n)]
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = simple
    while layer:
        fresh = set()
        for beta in layer:
            pairing = [0] * n
            for j, bj in enumerate(beta):
                if bj:
                    for i, cij in cols[j]:
                        pairing[i] += cij * bj
            for i in range(n):
                if pairing[i] >= 0 and not beta[i]:
                    continue  # p = 0, so p - pairing <= 0
                p = 0
                if pairing[i] >= 0:
                    down = list(beta)
                    while True:
                        down[i] -= 1
                        if tuple(down) not in roots:
                            break
                        p += 1
                if p - pairing[i] > 0:
                    up = list(beta)
                    up[i] += 1
                    fresh.add(tuple(up))
        fresh -= roots
        roots |= fresh
        layer = sorted(fresh)
    return sorted(roots, key=_height_lex_key)


@lru_cache(maxsize=None)
def _coroots_cached(t: LieType) -> tuple[Vector, ...]:
    # c[i][j] = <alpha_i, alpha_j^vee> = <alpha_j^vee, (alpha_i^vee)^vee>, so the
    # rows of c are exactly the pairings of the dual (coroot) system
    return tuple(generate_positive_roots(cartan_matrix(t)))


def positive_coroots(t: LieType | str) -> list[Vector]:
    """Positive coroots of type ``t`` in simple-coroot coordinates."""
    return list(_coroots_cached(_as_type(t)))


def _span(n: int, i: int, j: int, coeff: int = 1) -> list[int]:
    # 1-based inclusive range i..j; empty when j < i
    v = [0] * n
    for k in range(i, j + 1):
        v[k - 1] += coeff
    return v


def _add(*vs: list[int]) -> Vector:
    return tuple(sum(col) for col in zip(*vs))


def classical_coroot_table(t: LieType | str) -> list[Vector]:
    """Positive coroots of a classical type, written out from closed formulas.

    This does not touch the Cartan matrix, so it is an independent check on
    :func:`positive_coroots`. For D_l the list is the corrected one (the
    Bourbaki Planche IV expressions are wrong for coroots).
    """
    t = _as_type(t)
    if not t.is_classical:
        raise ValueError(f"{t} is not a classical type (A, B, C, D)")
    l, fam = t.rank, t.family
    out: list[Vector] = []
    if fam == "A":
        for i in range(1, l + 1):
            for j in range(i, l + 1):
                out.append(tuple(_span(l, i, j)))
    elif fam == "B":
        # coroot system is of type C_l
        for i in range(1, l + 1):
            for j in range(i, l + 1):
                out.append(_add(_span(l, i, j - 1), _span(l, j, l - 1, 2), _span(l, l, l)))
        for i in range(1, l):
            for j in range(i, l):
                out.append(tuple(_span(l, i, j)))
    elif fam == "C":
        # coroot system is of type B_l
        for i in range(1, l):
            for j in range(i, l):
                out.append(tuple(_span(l, i, j)))
        for i in range(1, l + 1):
            out.append(tuple(_span(l, i, l)))
        for i in range(1, l + 1):
            for j in range(i + 1, l + 1):
                out.append(_add(_span(l, i, j - 1), _span(l, j, l, 2)))
    else:
        for i in range(1, l):
            for j in range(i, l):
                out.append(tuple(_span(l, i, j)))
        for i in range(1, l):
            out.append(_add(_span(l, i, l - 2), _span(l, l, l)))
        for i in range(1, l):
            for j in range(i + 1, l):
                out.append(
                    _add(_span(l, i, j - 1), _span(l, j, l - 2, 2), _span(l, l - 1, l))
                )
    return sorted(out, key=_height_lex_key)


def diagram_automorphisms(t: LieType | str) -> list[Permutation]:
    """Dynkin diagram symmetries as 0-based node permutations.

    ``perm[i]`` is the image of node ``i``; the identity comes first.
    """
    t = _as_type(t)
    n, fam = t.rank, t.family
    ident = tuple(range(n))
    if fam == "A" and n >= 2:
        return [ident, tuple(reversed(ident))]
    if fam == "D" and n == 4:
        perms = []
        for img in itertools.permutations((0, 2, 3)):
            p = list(ident)
            for src, dst in zip((0, 2, 3), img):
                p[src] = dst
            perms.append(tuple(p))
        return perms
    if fam == "D":
        p = list(ident)
        p[n - 2], p[n - 1] = n - 1, n - 2
        return [ident, tuple(p)]
    if fam == "E" and n == 6:
        return [ident, (5, 1, 4, 3, 2, 0)]
    return [ident]


def act(perm: Permutation, v: Sequence[int]) -> Vector:
    """Move coordinate ``i`` of ``v`` to position ``perm[i]``."""
    out = [0] * len(v)
    for i, x in enumerate(v):
        out[perm[i]] = x
    return tuple(out)


@dataclass(frozen=True)
class Component:
    type: LieType
    cartan: Matrix
    coroots: tuple[Vector, ...]
    automorphisms: tuple[Permutation, ...]

    @property
    def rank(self) -> int:
        return self.type.rank

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """``<rho, beta>`` for every positive coroot ``beta``."""
        return tuple(sum(b) for b in self.coroots)

    @cached_property
    def rho_product(self) -> int:
        """Denominator of the Weyl formula, ``prod <rho, beta>``."""
        from .dimension import balanced_product

        return balanced_product(self.heights)

    @cached_property
    def columns(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """For node ``i``: the ``(coroot index, coefficient)`` pairs with nonzero coefficient."""
        cols: list[list[tuple[int, int]]] = [[] for _ in range(self.rank)]
        for k, b in enumerate(self.coroots):
            for i, x in enumerate(b):
                if x:
                    cols[i].append((k, x))
        return tuple(tuple(c) for c in cols)


def make_component(t: LieType | str) -> Component:
    t = _as_type(t)
    return Component(
        type=t,
        cartan=cartan_matrix(t),
        coroots=_coroots_cached(t),
        automorphisms=tuple(diagram_automorphisms(t)),
    )


@dataclass(frozen=True)
class RootDatum:
    components: tuple[Component, ...]
    offsets: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        offs, pos = [], 0
        for comp in self.components:
            offs.append(pos)
            pos += comp.rank
        object.__setattr__(self, "offsets", tuple(offs))

    @property
    def total_rank(self) -> int:
        return sum(c.rank for c in self.components)

    @property
    def N(self) -> int:
        return sum(len(c.coroots) for c in self.components)

    @property
    def types(self) -> tuple[LieType, ...]:
        return tuple(c.type for c in self.components)

    def __str__(self) -> str:
        return "+".join(str(t) for t in self.types)

    def split(self, weight: Sequence[int]) -> Iterator[tuple[Component, Sequence[int]]]:
        """Pair each component with its slice of a concatenated weight."""
        if len(weight) != self.total_rank:
            raise ValueError(
                f"weight has {len(weight)} coordinates, {self} needs {self.total_rank}"
            )
        for comp, off in zip(self.components, self.offsets):
            yield comp, weight[off : off + comp.rank]

    @cached_property
    def automorphisms(self) -> tuple[Permutation, ...]:
        """Diagram automorphisms of the product, including swaps of equal factors."""
        comps = self.components
        n = self.total_rank
        block_perms = []
        for sigma in itertools.permutations(range(len(comps))):
            if all(comps[k].type == comps[sigma[k]].type for k in range(len(comps))):
                block_perms.append(sigma)
        result = set()
        for sigma in block_perms:
            for choice in itertools.product(*(c.automorphisms for c in comps)):
                perm = [0] * n
                for k, (comp, local) in enumerate(zip(comps, choice)):
                    src, dst = self.offsets[k], self.offsets[sigma[k]]
                    for i in range(comp.rank):
                        perm[src + i] = dst + local[i]
                result.add(tuple(perm))
        ident = tuple(range(n))
        return (ident,) + tuple(sorted(result - {ident}))


def build_datum(types: Sequence[LieType | str] | LieType | str) -> RootDatum:
    """Root datum of a product of simple types; a string may use ``+`` (``"A1+A1"``)."""
    if isinstance(types, LieType):
        types = [types]
    elif isinstance(types, str):
        types = [s for s in types.split("+")] if types.strip() else []
    if not types:
        raise ValueError("a root datum needs at least one simple component")
    return RootDatum(tuple(make_component(t) for t in types))


def coroot_jsonl(t: LieType | str) -> Iterator[str]:
    """One JSON record per positive coroot, e.g. ``{"type":"C3","coroot":[1,2,2]}``."""
    t = _as_type(t)
    for b in positive_coroots(t):
        yield json.dumps({"type": str(t), "coroot": list(b)}, separators=(",", ":"))


def expected_coroot_count(t: LieType | str) -> int:
    t = _as_type(t)
    l = t.rank
    return {
        "A": l * (l + 1) // 2,
        "B": l * l,
        "C": l * l,
        "D": l * (l - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(l, 0),
        "F": 24,
        "G": 6,
    }[t.family]
