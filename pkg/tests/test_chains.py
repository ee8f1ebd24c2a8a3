"""Difference chains, alternation degrees, and the canonical chain."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from diffchain import (
    DiffChain,
    FinPoset,
    NotDecreasingError,
    NotSublatticeError,
    NotUpsetError,
    RangeError,
    TargetMismatchError,
    canonical_chain,
    closure_in_sublattice,
    coheyting_chain,
    degree,
    degrees,
    evaluate,
    upsets_of,
    verify_minimality,
)


@st.composite
def posets(draw, max_n=5):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    covers = draw(st.lists(st.sampled_from(pairs), max_size=6) if pairs else st.just([]))
    return FinPoset.from_covers(covers, n)


@st.composite
def poset_and_subset(draw, max_n=5):
    p = draw(posets(max_n))
    s = draw(st.frozensets(st.integers(min_value=0, max_value=p.n - 1)) if p.n else st.just(frozenset()))
    return p, s


@st.composite
def poset_and_chain(draw, max_n=5, max_len=4):
    """A poset with a decreasing chain of upsets, built by cumulative meets."""
    p = draw(posets(max_n))
    seeds = draw(st.lists(
        st.frozensets(st.integers(min_value=0, max_value=p.n - 1)) if p.n else st.just(frozenset()),
        max_size=max_len,
    ))
    comps = []
    current = frozenset(range(p.n))
    for s in seeds:
        current = current & p.upset_closure(s)
        comps.append(current)
    return p, DiffChain(p, tuple(comps))


def chain_poset(n):
    return FinPoset.from_covers([(i, i + 1) for i in range(n - 1)], n)


def two_level_poset():
    # a three element chain next to a two element chain: 0<1<2 and 3<4
    return FinPoset.from_covers([(0, 1), (1, 2), (3, 4)], 5)


# ----- DiffChain construction -------------------------------------------


def test_chain_validates_upsets():
    p = chain_poset(3)
    with pytest.raises(NotUpsetError):
        DiffChain(p, (frozenset({0}),))
    with pytest.raises(NotUpsetError):
        DiffChain(p, (frozenset({0, 1, 2}), frozenset({1})))


def test_chain_validates_decreasing():
    p = chain_poset(3)
    with pytest.raises(NotDecreasingError):
        DiffChain(p, (frozenset({2}), frozenset({1, 2})))


def test_chain_len_pairs_padded():
    p = chain_poset(3)
    c = DiffChain(p, (frozenset({0, 1, 2}), frozenset({1, 2}), frozenset({2})))
    assert len(c) == 3
    assert c.pairs == 2
    assert c.padded() == (frozenset({0, 1, 2}), frozenset({1, 2}), frozenset({2}), frozenset())
    even = DiffChain(p, (frozenset({1, 2}), frozenset({2})))
    assert even.pairs == 1 and even.padded() == even.sets
    empty = DiffChain(p, ())
    assert len(empty) == 0 and empty.pairs == 0 and empty.padded() == ()


def test_chain_is_immutable():
    c = DiffChain(chain_poset(2), (frozenset({1}),))
    with pytest.raises(AttributeError):
        c.sets = ()


# ----- evaluation --------------------------------------------------------


def test_evaluate_examples():
    p = chain_poset(3)
    top = frozenset({0, 1, 2})
    assert evaluate(DiffChain(p, ())) == frozenset()
    assert evaluate(DiffChain(p, (top,))) == top
    assert evaluate(DiffChain(p, (top, frozenset({1, 2})))) == frozenset({0})
    assert evaluate(
        DiffChain(p, (top, frozenset({1, 2}), frozenset({2})))
    ) == frozenset({0, 2})


@given(poset_and_chain())
def test_evaluate_is_odd_membership_count(case):
    p, chain = case
    value = evaluate(chain)
    for x in range(p.n):
        inside = sum(1 for s in chain.sets if x in s)
        assert (x in value) == (inside % 2 == 1)


# ----- alternation degrees ----------------------------------------------


def test_degrees_examples():
    p = chain_poset(3)
    assert degrees(p, {0, 2}) == (1, 2, 3)
    assert degrees(p, {1}) == (0, 1, 2)
    assert degrees(p, set()) == (0, 0, 0)
    assert degrees(p, {0, 1, 2}) == (1, 1, 1)
    assert degrees(chain_poset(5), {0, 2, 4}) == (1, 2, 3, 4, 5)


def test_degrees_on_disconnected_components():
    p = two_level_poset()
    assert degrees(p, {3}) == (0, 0, 0, 1, 2)
    assert degrees(p, {0, 4}) == (1, 2, 2, 0, 1)


def test_degree_single_element():
    p = chain_poset(3)
    assert degree(p, {0, 2}, 2) == 3
    with pytest.raises(RangeError):
        degree(p, {0}, 5)
    with pytest.raises(RangeError):
        degrees(p, {9})


@given(poset_and_subset())
def test_degrees_grow_along_the_order(case):
    p, v = case
    deg = degrees(p, v)
    for x in range(p.n):
        for y in p.up[x] - {x}:
            if (x in v) == (y in v):
                # same side: the top of any witness sequence can be swapped
                assert deg[y] >= deg[x]
            elif deg[x] > 0:
                # opposite side: any witness sequence extends by one step
                assert deg[y] >= deg[x] + 1


# ----- canonical chain ---------------------------------------------------


def test_canonical_chain_alternating_target():
    p = chain_poset(3)
    c = canonical_chain(p, {0, 2})
    assert c.sets == (
        frozenset({0, 1, 2}),
        frozenset({1, 2}),
        frozenset({2}),
        frozenset(),
    )
    assert c.pairs == 2
    assert evaluate(c) == frozenset({0, 2})


def test_canonical_chain_of_an_upset_has_one_pair():
    p = chain_poset(3)
    c = canonical_chain(p, {1, 2})
    assert c.sets == (frozenset({1, 2}), frozenset())
    assert c.pairs == 1


def test_canonical_chain_of_empty_target_is_empty():
    c = canonical_chain(chain_poset(3), set())
    assert c.sets == () and evaluate(c) == frozenset()


def test_canonical_chain_on_disconnected_components():
    p = two_level_poset()
    c = canonical_chain(p, {3})
    assert c.sets == (frozenset({3, 4}), frozenset({4}))
    assert c.pairs == 1
    assert evaluate(c) == frozenset({3})


def test_canonical_chain_longest_alternation():
    p = chain_poset(5)
    c = canonical_chain(p, {0, 2, 4})
    assert len(c) == 6 and c.pairs == 3
    assert evaluate(c) == frozenset({0, 2, 4})
    assert c.sets[-1] == frozenset()


@given(poset_and_subset())
def test_canonical_chain_components_are_degree_levels(case):
    p, v = case
    chain = canonical_chain(p, v)
    deg = degrees(p, v)
    comps = chain.sets
    assert len(comps) % 2 == 0
    for i, comp in enumerate(comps, start=1):
        assert comp == frozenset(x for x in range(p.n) if deg[x] >= i)
    # nothing of higher degree remains
    assert all(d <= len(comps) for d in deg)
    assert evaluate(chain) == v


@given(poset_and_subset())
def test_both_chain_routes_agree(case):
    p, v = case
    assert canonical_chain(p, v) == coheyting_chain(p, v)


# ----- minimality --------------------------------------------------------


def test_minimality_accepts_the_canonical_chain_itself():
    p = chain_poset(3)
    report = verify_minimality(p, {0, 2}, canonical_chain(p, {0, 2}))
    assert report.ok
    assert report.pair_count_ok
    assert report.competitor_pairs == report.canonical_pairs == 2
    assert report.component_failures == () and report.prefix_failures == ()


def test_minimality_accepts_a_padded_competitor():
    p = chain_poset(3)
    top = frozenset({0, 1, 2})
    competitor = DiffChain(p, (top, top, frozenset({2}), frozenset()))
    report = verify_minimality(p, {2}, competitor)
    assert report.ok
    assert report.competitor_pairs == 2 and report.canonical_pairs == 1


def test_minimality_rejects_wrong_value():
    p = chain_poset(3)
    competitor = DiffChain(p, (frozenset({1, 2}),))
    with pytest.raises(TargetMismatchError):
        verify_minimality(p, {0, 2}, competitor)


def test_minimality_rejects_foreign_poset():
    p = chain_poset(3)
    q = chain_poset(4)
    with pytest.raises(TargetMismatchError):
        verify_minimality(p, {2}, DiffChain(q, (frozenset({3}),)))


@given(poset_and_subset(max_n=3))
def test_minimality_holds_for_every_chain_over_small_posets(case):
    p, v = case
    members = upsets_of(p).upsets

    def chains(prefix, last, budget):
        yield prefix
        if budget:
            for u in members:
                if u < last:
                    yield from chains(prefix + (u,), u, budget - 1)

    for start in members:
        for sets in chains((start,), start, 2):
            dc = DiffChain(p, sets)
            if evaluate(dc) == v:
                assert verify_minimality(p, v, dc).ok


# ----- closure inside a coarser family ----------------------------------


def test_sublattice_closure_examples():
    p = chain_poset(3)
    family = [frozenset(), frozenset({2}), frozenset({0, 1, 2})]
    assert closure_in_sublattice(p, family, {1}) == frozenset({0, 1, 2})
    assert closure_in_sublattice(p, family, {2}) == frozenset({2})
    assert closure_in_sublattice(p, family, set()) == frozenset()


def test_sublattice_closure_requires_upsets_and_bounds():
    p = chain_poset(3)
    with pytest.raises(NotUpsetError):
        closure_in_sublattice(p, [frozenset(), frozenset({0}), frozenset({0, 1, 2})], {0})
    with pytest.raises(NotSublatticeError):
        closure_in_sublattice(p, [frozenset(), frozenset({2})], {2})


def test_sublattice_closure_requires_union_and_meet_closure():
    p = FinPoset.from_covers([], 3)
    family = [frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1, 2})]
    with pytest.raises(NotSublatticeError):
        closure_in_sublattice(p, family, {0})


@given(poset_and_subset(max_n=4))
def test_sublattice_closure_over_all_upsets_is_the_upward_closure(case):
    p, s = case
    family = upsets_of(p).upsets
    assert closure_in_sublattice(p, family, s) == p.upset_closure(s)
