import random

import pytest
from hypothesis import given, settings, strategies as st

from cubicpm.errors import NotPerfect, SizeLimit
from cubicpm.graph_core import b3, cubic_bridgeless_multigraphs, k4, k33, necklace, petersen, prism, small_cuts
from cubicpm.matching import (
    alternating_number,
    alternating_numbers,
    count_perfect_matchings,
    enumerate_boundary_matchings,
    enumerate_perfect_matchings,
    flip_matchings,
    matching_counts,
    max_switch_components,
    symdiff_components,
)
from _oracles import alternating_packing_number, perfect_matchings_by_subsets


@pytest.mark.parametrize("G,m,mstar", [(k4(), 3, 1), (b3(), 3, 1), (k33(), 6, 2), (petersen(), 6, 2), (prism(), 4, 1)])
def test_counts(G, m, mstar):
    c = matching_counts(G)
    assert c.m == m
    assert c.m_star == mstar
    assert count_perfect_matchings(G) == m


def test_petersen_edges_uniform():
    assert set(matching_counts(petersen()).per_edge.values()) == {2}


def test_enumeration_matches_subset_oracle():
    for n in (4, 6, 8):
        for G in cubic_bridgeless_multigraphs(n):
            assert set(enumerate_perfect_matchings(G)) == set(perfect_matchings_by_subsets(G))


def test_order_is_canonical():
    ms = enumerate_perfect_matchings(petersen())
    keys = [tuple(sorted(M)) for M in ms]
    assert keys == sorted(keys)


def test_size_cap():
    with pytest.raises(SizeLimit):
        enumerate_perfect_matchings(necklace(3), max_vertices=8)


def test_boundary_matchings_collapse_to_perfect():
    G = k4()
    assert enumerate_boundary_matchings(G, range(4)) == enumerate_perfect_matchings(G)


def test_boundary_matchings_prism_triangle():
    fam = enumerate_boundary_matchings(prism(), [0, 1, 2])
    # three "edge + opposite rung" elements plus the all-rungs element
    assert len(fam) == 4
    assert frozenset({6, 7, 8}) in fam


def test_boundary_matchings_b3_single_vertex():
    assert len(enumerate_boundary_matchings(b3(), [0])) == 3


def test_symdiff():
    G = prism()
    rungs = frozenset({6, 7, 8})
    assert symdiff_components(G, rungs, rungs) == 0
    assert symdiff_components(G, rungs, frozenset({6, 1, 4})) == 1
    N = necklace(3)
    assert symdiff_components(N, {0, 4, 5, 9, 10, 14}, {1, 3, 6, 8, 10, 14}) == 2
    with pytest.raises(NotPerfect):
        symdiff_components(G, {6}, rungs)


def test_alternating_numbers_examples():
    assert alternating_number(prism(), range(6), {6, 7, 8}) == 1
    N = necklace(3)
    V = range(N.n)
    # the matching through all three junctions admits only the long cycle
    assert alternating_number(N, V, {2, 7, 12, 15, 16, 17}) == 1
    assert alternating_number(N, V, {0, 4, 5, 9, 10, 14}) == 3


def test_forest_gives_zero():
    G = petersen()
    X = [0, 1, 2]
    assert set(alternating_numbers(G, X).values()) == {0}


def test_alternating_number_against_packing_oracle():
    graphs = [prism(), petersen(), necklace(2), k33()] + cubic_bridgeless_multigraphs(6)
    rng = random.Random(11)
    for G in graphs:
        for _ in range(4):
            size = rng.randint(1, min(G.n, 14))
            X = rng.sample(range(G.n), size)
            table = alternating_numbers(G, X)
            for M, a in table.items():
                assert a == alternating_packing_number(G, X, M)


def test_max_switch():
    assert max_switch_components(k4()).count == 1
    assert max_switch_components(b3()).count == 1
    w = max_switch_components(necklace(3))
    assert w.count == 3


def test_max_switch_agrees_with_alternating_number():
    G = petersen()
    w = max_switch_components(G)
    assert alternating_number(G, range(G.n), w.pair[0]) == w.count


def test_flips_give_distinct_matchings():
    N = necklace(3)
    w = max_switch_components(N)
    flips = flip_matchings(N, *w.pair)
    assert len(set(flips)) == 2 ** w.count
    assert set(flips) <= set(enumerate_perfect_matchings(N))


def test_small_count_lemma_on_corpus():
    for n in (2, 4, 6, 8):
        for G in cubic_bridgeless_multigraphs(n):
            ms = enumerate_perfect_matchings(G)
            assert len(ms) >= n / 4 + 2
            if n >= 6:
                assert len(ms) >= 4
            for e in range(G.m):
                assert sum(1 for M in ms if e not in M) >= 2


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(range(16)))
def test_cut_parity(idx):
    G = cubic_bridgeless_multigraphs(8)[idx]
    ms = enumerate_perfect_matchings(G)
    for c in small_cuts(G, 3):
        for M in ms:
            assert len(M & c.cut_edges) % 2 == c.size % 2
