import pytest

from jugglingsp.errors import InvalidMove, NotApplicable, NotSymplectic
from jugglingsp.mutations import (
    FULL,
    SYMPLECTIC,
    SegmentMove,
    apply_move,
    build_poset,
    cell_dimension,
    check_conjecture,
    correction_move,
    downward_mutations,
    segment_starts,
    symplectic_cell_dimension,
    symplectic_moves,
)
from jugglingsp.mutations.poset import induced_order
from jugglingsp.patterns import (
    JugglingPattern,
    enumerate_jp,
    is_symplectic,
    jp_leq,
    minimal_pattern,
    top_symplectic_patterns,
)
from oracles import brute_moves


def P(*sets):
    return JugglingPattern.from_sets([[int(c) for c in s] for s in sets])


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (3, 4), (2, 5), (3, 6)])
def test_moves_match_definition(k, n):
    for p in enumerate_jp(k, n):
        tup = tuple(frozenset(s) for s in p.as_lists())
        expected = sorted((key, new) for key, new in brute_moves(tup))
        mine = sorted(
            ((m.vertex, m.column, m.length, m.shift), tuple(frozenset(s) for s in t.as_lists()))
            for m, t in downward_mutations(p)
        )
        assert mine == expected


def test_targets_are_lower():
    for p in enumerate_jp(2, 5):
        for _, t in downward_mutations(p):
            assert jp_leq(t, p) and t != p


def test_extremal_dimensions():
    for k, n in [(1, 4), (2, 4), (2, 6), (3, 6)]:
        assert cell_dimension(minimal_pattern(k, n)) == 0
        for top in top_symplectic_patterns(k, n):
            assert cell_dimension(top) == k * (n - k)
            assert symplectic_cell_dimension(top) == k * (n - k) - k * (k - 1) // 2


def test_segment_starts():
    # cells whose predecessor (i-1, j-1) is absent
    assert segment_starts(P("12", "23", "34", "14")) == [(0, 1), (3, 1)]
    assert segment_starts(minimal_pattern(2, 4)) == [(i, 3) for i in range(4)]


def test_apply_move_rejects_invalid():
    p = minimal_pattern(2, 4)
    with pytest.raises(InvalidMove):
        apply_move(p, SegmentMove(0, 3, 1, 1))
    with pytest.raises(InvalidMove):
        apply_move(p, SegmentMove(9, 3, 1, 1))


def test_correction_pairs_commute():
    top = P("12", "23", "34", "14")
    moves = symplectic_moves(top)
    pairs = [m for m in moves if m.is_pair]
    assert pairs
    for sm in pairs:
        a, b = sm.moves
        assert apply_move(apply_move(top, a), b) == sm.bottom == apply_move(apply_move(top, b), a)
        assert not is_symplectic(apply_move(top, a))
        second, bottom = correction_move(top, a)
        assert second == b and bottom == sm.bottom


def test_correction_rejects_symplectic_single():
    top = P("12", "23", "34", "14")
    single = next(m for m in symplectic_moves(top) if not m.is_pair)
    with pytest.raises(NotApplicable):
        correction_move(top, single.first)


def test_symplectic_moves_need_symplectic_input():
    with pytest.raises(NotSymplectic):
        symplectic_moves(P("14", "12", "23", "34"))


@pytest.mark.parametrize("k,n", [(1, 4), (2, 4), (1, 6), (2, 6), (3, 6), (2, 8)])
def test_pairing_is_perfect(k, n):
    # raises UnpairedMove / NoProblemFound on failure
    for p in enumerate_jp(k, n):
        if is_symplectic(p):
            for sm in symplectic_moves(p):
                assert is_symplectic(sm.bottom)


# the symplectic (2,4) Hasse diagram, nodes numbered bottom to top
HASSE_24 = {
    1: P("34", "34", "34", "34"),
    2: P("24", "34", "34", "34"),
    3: P("34", "24", "34", "24"),
    4: P("34", "34", "24", "34"),
    5: P("24", "23", "34", "14"),
    6: P("13", "24", "34", "24"),
    7: P("24", "34", "24", "34"),
    8: P("34", "24", "13", "24"),
    9: P("34", "14", "24", "23"),
    10: P("12", "23", "34", "14"),
    11: P("24", "13", "24", "13"),
    12: P("13", "24", "13", "24"),
    13: P("34", "14", "12", "23"),
}
EDGES_24 = [
    (1, 2), (1, 3), (1, 4), (2, 5), (2, 6), (2, 7), (3, 5), (3, 6), (3, 8), (3, 9), (4, 7), (4, 8),
    (4, 9), (5, 10), (5, 11), (6, 10), (6, 12), (7, 12), (7, 11), (8, 12), (8, 13), (9, 11), (9, 13),
]
TIERS_24 = {0: {1}, 1: {2, 3, 4}, 2: {5, 6, 7, 8, 9}, 3: {10, 11, 12, 13}}


def test_symplectic_hasse_24_node_for_node():
    poset = build_poset(2, 4, SYMPLECTIC)
    assert len(poset) == 13 and len(poset.hasse) == 23
    label = {poset.index[p]: node for node, p in HASSE_24.items()}
    assert sorted(label.values()) == list(range(1, 14))
    edges = sorted(tuple(sorted((label[u], label[v]))) for u, v in poset.hasse)
    assert edges == sorted(EDGES_24)
    for d, nodes in TIERS_24.items():
        assert {label[i] for i in poset.tiers()[d]} == nodes


@pytest.mark.parametrize("k,n", [(1, 4), (2, 4), (1, 6), (2, 6), (3, 5)])
def test_full_reachability_is_the_order(k, n):
    poset = build_poset(k, n, FULL)
    pats = poset.patterns
    for u, upper in enumerate(pats):
        for v, lower in enumerate(pats):
            assert bool(poset.reach[u] >> v & 1) == jp_leq(lower, upper)


def test_induced_order_bitsets():
    pats = list(enumerate_jp(2, 5))
    below = induced_order(pats)
    for u, a in enumerate(pats):
        for v, b in enumerate(pats):
            assert bool(below[u] >> v & 1) == jp_leq(b, a)


def test_dot_output():
    dot = build_poset(2, 4, SYMPLECTIC).to_dot()
    assert dot.startswith('digraph "symplectic"')
    assert dot.count("->") == 23


@pytest.mark.parametrize("k,n", [(2, 4), (2, 6), (3, 6)])
def test_conjecture_report(k, n):
    a, b = check_conjecture(k, n), check_conjecture(k, n)
    assert a.to_json() == b.to_json()
    assert a.order_violations == []
