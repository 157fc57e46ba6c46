import json

import pytest
from hypothesis import given, strategies as st

from weyldeg.rootdata import (
    LieType,
    act,
    build_datum,
    cartan_matrix,
    classical_coroot_table,
    coroot_jsonl,
    diagram_automorphisms,
    expected_coroot_count,
    generate_positive_roots,
    positive_coroots,
)

ALL_TYPES = (
    [LieType("A", l) for l in range(1, 13)]
    + [LieType("B", l) for l in range(2, 13)]
    + [LieType("C", l) for l in range(2, 13)]
    + [LieType("D", l) for l in range(4, 13)]
    + [LieType("E", l) for l in (6, 7, 8)]
    + [LieType("F", 4), LieType("G", 2)]
)
CLASSICAL = [t for t in ALL_TYPES if t.is_classical]
FIXED_N = {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}


@pytest.mark.parametrize("bad", ["B1", "C1", "D3", "E5", "E9", "F3", "G3", "A0", "H3", "C", "3C"])
def test_invalid_types_rejected(bad):
    with pytest.raises(ValueError):
        LieType.parse(bad)


def test_parse_roundtrip():
    assert str(LieType.parse("c159")) == "C159"
    assert LieType.parse(" E8 ") == LieType("E", 8)


def test_cartan_examples():
    assert cartan_matrix("A2") == ((2, -1), (-1, 2))
    assert cartan_matrix("G2") == ((2, -3), (-1, 2))
    assert cartan_matrix("B3") == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
    assert cartan_matrix("C3") == ((2, -1, 0), (-1, 2, -1), (0, -2, 2))
    assert cartan_matrix("F4")[1][2] == -2 and cartan_matrix("F4")[2][1] == -1
    e6 = cartan_matrix("E6")
    # node 2 hangs off node 4; chain 1-3-4-5-6
    assert e6[1][3] == -1 and e6[0][2] == -1 and e6[1][2] == 0
    d5 = cartan_matrix("D5")
    assert d5[2][3] == d5[2][4] == -1 and d5[3][4] == 0


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_cartan_invariants(t):
    c = cartan_matrix(t)
    n = t.rank
    for i in range(n):
        assert c[i][i] == 2
        for j in range(n):
            if i != j:
                assert c[i][j] in (0, -1, -2, -3)
                assert (c[i][j] == 0) == (c[j][i] == 0)


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_coroot_counts(t):
    roots = positive_coroots(t)
    assert len(roots) == expected_coroot_count(t)
    if str(t) in FIXED_N:
        assert len(roots) == FIXED_N[str(t)]
    assert len(set(roots)) == len(roots)
    assert all(min(b) >= 0 and sum(b) > 0 for b in roots)
    simple = [b for b in roots if sum(b) == 1]
    assert sorted(simple) == sorted(tuple(int(i == j) for j in range(t.rank)) for i in range(t.rank))


@pytest.mark.parametrize("t", CLASSICAL, ids=str)
def test_generator_matches_closed_formulas(t):
    assert set(positive_coroots(t)) == set(classical_coroot_table(t))


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_closure_has_predecessor(t):
    roots = set(positive_coroots(t))
    for b in roots:
        if sum(b) >= 2:
            assert any(
                b[i] > 0 and tuple(x - (j == i) for j, x in enumerate(b)) in roots
                for i in range(t.rank)
            )


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_automorphisms_preserve_coroots(t):
    roots = set(positive_coroots(t))
    for perm in diagram_automorphisms(t):
        assert sorted(perm) == list(range(t.rank))
        assert {act(perm, b) for b in roots} == roots


def test_automorphism_examples():
    assert diagram_automorphisms("A3") == [(0, 1, 2), (2, 1, 0)]
    assert len(diagram_automorphisms("D4")) == 6
    assert all(p[1] == 1 for p in diagram_automorphisms("D4"))
    assert diagram_automorphisms("D5") == [(0, 1, 2, 3, 4), (0, 1, 2, 4, 3)]
    assert diagram_automorphisms("E6")[1] == (5, 1, 4, 3, 2, 0)
    for t in ("A1", "B3", "C4", "E7", "E8", "F4", "G2"):
        assert diagram_automorphisms(t) == [tuple(range(LieType.parse(t).rank))]


def test_c3_coroots_explicit():
    assert set(positive_coroots("C3")) == {
        (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1),
        (1, 1, 1), (0, 1, 2), (1, 1, 2), (1, 2, 2),
    }


def test_b3_table():
    # long formula family (coefficient 2 pattern) plus the plain intervals
    assert set(classical_coroot_table("B3")) == {
        (2, 2, 1), (1, 2, 1), (1, 1, 1), (0, 2, 1), (0, 1, 1), (0, 0, 1),
        (1, 0, 0), (1, 1, 0), (0, 1, 0),
    }


def test_d4_table():
    roots = classical_coroot_table("D4")
    assert len(roots) == 12
    assert (1, 2, 1, 1) in roots and (0, 1, 1, 1) in roots and (1, 1, 0, 1) in roots


def test_a_small():
    assert positive_coroots("A2") == [(0, 1), (1, 0), (1, 1)]
    assert len(positive_coroots("A3")) == 6


def test_non_classical_table_rejected():
    with pytest.raises(ValueError):
        classical_coroot_table("G2")


@pytest.mark.parametrize("l", range(2, 9))
def test_b_c_duality(l):
    # coroots of B_l are the roots of C_l: same count, and B_l carries the 2-coefficient family
    b = positive_coroots(LieType("B", l))
    c = positive_coroots(LieType("C", l))
    assert len(b) == len(c) == l * l
    assert (2,) * (l - 1) + (1,) in b
    assert (1,) + (2,) * (l - 1) in c


def test_generate_positive_roots_directly():
    g2 = generate_positive_roots(cartan_matrix("G2"))
    assert len(g2) == 6
    assert len(generate_positive_roots(cartan_matrix("E8"))) == 120
    # heights non-decreasing
    hs = [sum(r) for r in g2]
    assert hs == sorted(hs)


def test_build_datum():
    d = build_datum("A1+A1")
    assert (d.total_rank, d.N) == (2, 2)
    assert set(d.automorphisms) == {(0, 1), (1, 0)}
    d = build_datum(["A2"])
    assert (d.total_rank, d.N) == (2, 3)
    assert build_datum("C159").N == 25281
    with pytest.raises(ValueError):
        build_datum([])
    mixed = build_datum("A1+A2")
    # no swap between non-identical factors
    assert set(mixed.automorphisms) == {(0, 1, 2), (0, 2, 1)}


def test_product_automorphisms_identical_blocks():
    d = build_datum("A2+A2")
    # 2 x 2 diagram flips times the block swap
    assert len(d.automorphisms) == 8


@given(st.lists(st.sampled_from(["A1", "A2", "B2", "G2"]), min_size=1, max_size=3))
def test_product_automorphisms_are_permutations(parts):
    d = build_datum("+".join(parts))
    for p in d.automorphisms:
        assert sorted(p) == list(range(d.total_rank))


def test_coroot_jsonl():
    lines = list(coroot_jsonl("C3"))
    assert len(lines) == 9
    assert lines[-1] == '{"type":"C3","coroot":[1,2,2]}'
    assert all(json.loads(x)["type"] == "C3" for x in lines)
