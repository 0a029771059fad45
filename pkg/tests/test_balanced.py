import random
from fractions import Fraction

import pytest

from cubicpm.balanced import BalancedDistribution, balanced_distribution, burl_certificate, check_balanced_claim
from cubicpm.errors import Infeasible, NotThreeCut
from cubicpm.graph_core import (
    b3,
    cubic_bridgeless_multigraphs,
    edge_cut,
    k4,
    k4_chain,
    necklace,
    petersen,
    prism,
    small_cuts,
    triangle_replace,
)
from cubicpm.graph_core.multigraph import CubicMultigraph

third = Fraction(1, 3)


@pytest.mark.parametrize("G", [k4(), b3()])
def test_uniform_on_three(G):
    d = balanced_distribution(G)
    assert sorted(w for _, w in d.support) == [third] * 3


def test_petersen():
    G = petersen()
    d = balanced_distribution(G)
    assert len(d.support) <= 16
    for e in range(G.m):
        assert d.marginal(e) == third
    assert d.total() == 1


def test_infeasible_target():
    with pytest.raises(Infeasible):
        balanced_distribution(k4(), target=Fraction(1, 2))


def test_claim_on_triangle_cut():
    G = triangle_replace(k4(), 0)
    d = balanced_distribution(G)
    tri = [v for v in G.vertices() if v == 0 or v >= 4]
    assert check_balanced_claim(d, edge_cut(G, tri))


def test_claim_fails_when_cut_fully_matched():
    G = prism()
    rungs = frozenset({6, 7, 8})
    d = BalancedDistribution([(rungs, Fraction(1))], third, frozenset(G.vertices()))
    assert not check_balanced_claim(d, edge_cut(G, [0, 1, 2]))


def test_claim_needs_three_cut():
    G = necklace(2)
    d = balanced_distribution(G)
    with pytest.raises(NotThreeCut):
        check_balanced_claim(d, edge_cut(G, [0, 1, 2, 3]))


def test_claim_k4_chain_middle_cut():
    G = k4_chain(length=2)
    d = balanced_distribution(G)
    middle = [c for c in small_cuts(G) if c.size == 3 and c.cyclic]
    assert middle
    assert all(check_balanced_claim(d, c) for c in middle)


def test_diamond_is_two_twig():
    c = burl_certificate(necklace(3), range(4))
    assert c.is_burl and c.min_expected == Fraction(2, 3)


def test_forest_side_not_burl():
    c = burl_certificate(petersen(), [0, 1, 2, 3])
    assert c.min_expected == 0 and not c.is_burl


def test_monotone_under_superset():
    G = necklace(3)
    small = burl_certificate(G, range(4))
    big = burl_certificate(G, range(8))
    assert small.is_burl and big.is_burl
    assert big.min_expected >= small.min_expected


def test_relabel_invariance():
    G = k4_chain(length=4)
    X = list(range(3, 9))
    base = burl_certificate(G, X).min_expected
    rng = random.Random(5)
    for _ in range(3):
        perm = list(range(G.n))
        rng.shuffle(perm)
        H = CubicMultigraph([(perm[u], perm[v]) for u, v in G.edges], G.n)
        assert burl_certificate(H, [perm[v] for v in X]).min_expected == base


def test_balanced_on_small_corpus():
    for n in (2, 4, 6, 8):
        for G in cubic_bridgeless_multigraphs(n):
            d = balanced_distribution(G)
            assert d.is_exact(G)
            for c in small_cuts(G):
                if c.size == 3:
                    assert check_balanced_claim(d, c)
