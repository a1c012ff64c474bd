import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jugglingsp.errors import CardinalityMismatch, JugglingViolation, OddAmbient, RankTooLarge, ShapeMismatch
from jugglingsp.patterns import (
    BitSubset,
    JugglingPattern,
    count_jp,
    enumerate_jp,
    gale_leq,
    is_maximal,
    is_symplectic,
    is_symplectic_subset,
    jp_leq,
    minimal_pattern,
    rmap_pattern,
    rmap_subset,
    rotated_pattern,
    top_symplectic_patterns,
)
from oracles import brute_gale_leq, brute_leq, brute_patterns, brute_symplectic


def sets_of(p):
    return tuple(frozenset(s) for s in p.as_lists())


@pytest.mark.parametrize("k,n", [(0, 3), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4), (2, 5)])
def test_enumeration_matches_brute_force(k, n):
    mine = [sets_of(p) for p in enumerate_jp(k, n)]
    assert len(mine) == len(set(mine))
    assert set(mine) == set(brute_patterns(k, n))


@pytest.mark.parametrize("k,n,count", [(0, 4, 1), (1, 2, 3), (2, 4, 33), (2, 6, 473), (3, 6, 883), (2, 8, 5281)])
def test_counts(k, n, count):
    assert count_jp(k, n) == count


def test_enumeration_is_sorted_and_deterministic():
    a = [p.masks for p in enumerate_jp(2, 5)]
    assert a == sorted(a)
    assert a == [p.masks for p in enumerate_jp(2, 5)]


def test_validation_errors():
    with pytest.raises(CardinalityMismatch):
        JugglingPattern.from_sets([[1], [1, 2], [1], [1]])
    with pytest.raises(JugglingViolation) as exc:
        JugglingPattern.from_sets([[1], [1], [1], [1]])
    assert exc.value.vertex == 0
    with pytest.raises(ShapeMismatch):
        JugglingPattern.from_sets([[1], [2], [3]], n=4)


def test_json_round_trip():
    for p in enumerate_jp(2, 4):
        assert JugglingPattern.from_json(p.dumps()) == p
        assert json.loads(p.dumps())["sets"] == p.as_lists()


def test_gale_against_sorted_comparison():
    subsets = [BitSubset.of(6, c) for c in itertools.combinations(range(1, 7), 3)]
    for a in subsets:
        for b in subsets:
            assert gale_leq(a, b) == brute_gale_leq(a.elements, b.elements)
    with pytest.raises(CardinalityMismatch):
        gale_leq(BitSubset.of(4, [1]), BitSubset.of(4, [1, 2]))


def test_jp_leq_against_brute_force():
    pats = list(enumerate_jp(2, 4))
    for a in pats:
        for b in pats:
            assert jp_leq(a, b) == brute_leq(sets_of(a), sets_of(b))


def test_order_extremes():
    for k, n in [(1, 4), (2, 4), (2, 5)]:
        bottom = minimal_pattern(k, n)
        assert all(jp_leq(bottom, p) for p in enumerate_jp(k, n))


def test_rmap_subset():
    assert rmap_subset(BitSubset.of(4, [1, 2])).elements == (1, 2)
    assert rmap_subset(BitSubset.of(4, [1])).elements == (1, 2, 3)
    assert is_symplectic_subset(BitSubset.of(4, [1, 2]))
    assert not is_symplectic_subset(BitSubset.of(4, [1, 4]))
    with pytest.raises(OddAmbient):
        rmap_subset(BitSubset.of(3, [1]))


def test_symplectic_against_brute_force():
    for k, n in [(1, 4), (2, 4), (3, 4), (2, 6)]:
        for p in enumerate_jp(k, n):
            assert is_symplectic(p) == brute_symplectic(sets_of(p))


def test_symplectic_counts_and_example():
    assert sum(is_symplectic(p) for p in enumerate_jp(2, 4)) == 13
    assert sum(is_symplectic(p) for p in enumerate_jp(1, 6)) == 63
    assert is_symplectic(JugglingPattern.from_sets([[2, 4], [1, 3], [2, 4], [1, 3]]))
    assert not is_symplectic(JugglingPattern.from_sets([[1, 4], [1, 2], [2, 3], [3, 4]]))


def test_minimal_maps_to_minimal():
    assert rmap_pattern(minimal_pattern(2, 6)) == minimal_pattern(4, 6)


def test_top_symplectic_patterns():
    for k, m in [(1, 2), (2, 2), (1, 3), (2, 3), (3, 3), (2, 4)]:
        tops = list(top_symplectic_patterns(k, 2 * m))
        assert len(tops) == 2 ** k * len(list(itertools.combinations(range(m), k)))
        assert all(is_maximal(p) and is_symplectic(p) for p in tops)
    with pytest.raises(RankTooLarge):
        list(top_symplectic_patterns(3, 4))


patterns_24 = list(enumerate_jp(2, 4))
patterns_36 = list(enumerate_jp(3, 6))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(patterns_36))
def test_rmap_involution_and_symplectic_criterion(p):
    r = rmap_pattern(p)
    assert rmap_pattern(r) == p
    assert is_symplectic(p) == all(a & ~b == 0 for a, b in zip(p.masks, r.masks))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(patterns_24), st.sampled_from(patterns_24), st.sampled_from(patterns_24))
def test_jp_leq_is_a_partial_order(a, b, c):
    assert jp_leq(a, a)
    if jp_leq(a, b) and jp_leq(b, a):
        assert a == b
    if jp_leq(a, b) and jp_leq(b, c):
        assert jp_leq(a, c)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 8), min_size=1, max_size=4, unique=True))
def test_rotated_patterns_are_maximal(seed):
    p = rotated_pattern(BitSubset.of(8, seed))
    assert is_maximal(p)
    assert JugglingPattern.from_sets(p.as_lists()) == p
