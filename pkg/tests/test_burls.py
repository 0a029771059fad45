import pytest

from cubicpm.balanced import ONE_THIRD, burl_certificate
from cubicpm.bounds.constants import ALPHA, BETA1, BETA2
from cubicpm.burls import (
    Burl,
    Foliage,
    burl_by_2cuts,
    burl_by_4cut,
    burl_by_k4_chain,
    burl_by_tree_branch,
    foliage_weight,
    is_twig,
)
from cubicpm.errors import HypothesisFailed, NotAPath, NotFourCut, PreconditionFailed
from cubicpm.graph_core import (
    chain_tail_replace,
    digon_ring,
    k4_chain,
    necklace,
    necklace_block,
    petersen,
    prism,
    small_cuts,
    triangle_replace,
)
from cubicpm.klee import klee_foliage
from cubicpm.matching import max_switch_components
from cubicpm.structure.decomposition import SmallCutDecomposition, maximize_decomposition, refine_decomposition
from cubicpm.structure.twigs import elementary_twigs


def _maximal(G):
    Y = [y.vertices for y in elementary_twigs(G)]
    return maximize_decomposition(G, refine_decomposition(G, Y), Y)


def _degree_two_run(d):
    """Tree vertices of degree 2, in path order (the tree is a path here)."""
    leaf = d.leaves()[0]
    adj = d.adjacency()
    order, prev, cur = [leaf], None, leaf
    while True:
        nxt = [b for b, _ in adj[cur] if b != prev]
        if not nxt:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    return [t for t in order if d.degree(t) == 2]


def _ring_path(G, blocks, inner):
    """Path decomposition of a ring of 2-connected blocks: leaf, one tree vertex per inner block, leaf."""
    phi = [0] * G.n
    rest = inner + 1
    for i, blk in enumerate(blocks):
        t = i if i <= inner else rest
        for v in blk:
            phi[v] = t
    d = SmallCutDecomposition(rest + 1, [(i, i + 1) for i in range(rest)], phi)
    d.validate(G)
    return d


def _digon_blocks(L):
    return [frozenset({2 * i, 2 * i + 1}) for i in range(L)]


def _necklace_blocks(L):
    return [necklace_block(i) for i in range(L)]


# twigs

def test_is_twig_examples():
    G = necklace(3)
    assert is_twig(G, necklace_block(0)) == "twig2"
    assert is_twig(petersen(), [0]) is None
    H = k4_chain(length=4)
    fives = [c.side for c in small_cuts(H, 3) if c.size == 3 and len(c.side) == 5]
    assert fives and all(is_twig(H, X) == "twig3" for X in fives)
    # a triangle is not a 3-twig
    T = triangle_replace(petersen(), 0)
    assert len(T.boundary([0, 10, 11])) == 3 and is_twig(T, [0, 10, 11]) is None


def test_twigs_are_burls():
    for G in (necklace(3), triangle_replace(petersen(), 0), prism()):
        for c in small_cuts(G, 3):
            X = c.side
            kind = is_twig(G, X)
            if kind is None or len(X) > 8:
                continue
            cert = burl_certificate(G, X)
            assert cert.is_burl
            if kind == "twig2":
                assert cert.min_expected >= 2 * ONE_THIRD


def test_superset_closure_on_necklace():
    G = necklace(4)
    X = necklace_block(1)
    Y = X | necklace_block(2)
    assert burl_certificate(G, X).is_burl and burl_certificate(G, Y).is_burl


# 4-cut lemma

def test_4cut_burl_in_necklace():
    G = necklace(4)
    # a diamond plus the first two vertices of the next block
    X = necklace_block(1) | {8, 9}
    assert len(G.boundary(X)) == 4
    b = burl_by_4cut(G, X)
    assert b is not None and b.certificate == "4cut" and b.kind == "other"
    assert burl_certificate(G, X).is_burl


def test_4cut_needs_two_matchings():
    G = petersen()
    # an edge: delta = 4 but G|X has a single perfect matching
    assert len(G.boundary({0, 1})) == 4
    assert burl_by_4cut(G, {0, 1}) is None
    with pytest.raises(NotFourCut):
        burl_by_4cut(necklace(4), necklace_block(1))


# chain lemma

def test_k4_chain_burl_with_lp():
    G = k4_chain(length=14)
    d = _maximal(G)
    run = _degree_two_run(d)
    assert len(run) == 10
    b = burl_by_k4_chain(G, d, run)
    assert b.certificate == "k4chain"
    cert = burl_certificate(G, b.vertices)
    assert cert.is_burl and cert.min_expected >= ONE_THIRD


def test_k4_chain_length_nine_fails():
    G = k4_chain(length=14)
    d = _maximal(G)
    with pytest.raises(HypothesisFailed) as e:
        burl_by_k4_chain(G, d, _degree_two_run(d)[:9])
    assert e.value.clause == "length"


def test_k4_chain_b3_hub_fails():
    G = digon_ring(12)
    d = _ring_path(G, _digon_blocks(12), 10)
    with pytest.raises(HypothesisFailed) as e:
        burl_by_k4_chain(G, d, list(range(1, 11)))
    assert e.value.clause == "hub"


def test_k4_chain_two_cut_fails():
    G = necklace(12)
    d = _ring_path(G, _necklace_blocks(12), 10)
    with pytest.raises(HypothesisFailed) as e:
        burl_by_k4_chain(G, d, list(range(1, 11)))
    assert e.value.clause == "cut_size"


def test_not_a_path():
    G = necklace(12)
    d = _ring_path(G, _necklace_blocks(12), 10)
    with pytest.raises(NotAPath):
        burl_by_2cuts(G, d, [1, 3])
    with pytest.raises(HypothesisFailed) as e:
        burl_by_2cuts(G, d, [0, 1])
    assert e.value.clause == "degree"


# 2-cut lemma

def test_2cuts_on_necklace_with_lp():
    G = necklace(5)
    d = _ring_path(G, _necklace_blocks(5), 2)
    b = burl_by_2cuts(G, d, [1, 2])
    assert b.vertices == necklace_block(1) | necklace_block(2)
    assert burl_certificate(G, b.vertices).is_burl


def test_2cuts_single_vertex_has_two_only():
    G = necklace(5)
    d = _ring_path(G, _necklace_blocks(5), 2)
    with pytest.raises(HypothesisFailed) as e:
        burl_by_2cuts(G, d, [1])
    assert e.value.clause == "two_cuts"


# tree branches

def test_tree_branch_via_chain():
    G = k4_chain(length=36)
    d = _maximal(G)
    run = _degree_two_run(d)
    assert len(run) == 32
    b = burl_by_tree_branch(G, d, run)
    assert b.certificate == "tree_branch/k4chain@0"
    window = burl_by_k4_chain(G, d, run[:10])
    assert window.vertices <= b.vertices
    assert burl_certificate(G, window.vertices).is_burl


def test_tree_branch_via_2cuts():
    G = digon_ring(36)
    d = _ring_path(G, _digon_blocks(36), 32)
    b = burl_by_tree_branch(G, d, list(range(1, 33)))
    assert b.certificate == "tree_branch/2cuts"
    assert len(b.vertices) == 64


def test_tree_branch_31_fails():
    G = digon_ring(36)
    d = _ring_path(G, _digon_blocks(36), 32)
    with pytest.raises(HypothesisFailed) as e:
        burl_by_tree_branch(G, d, list(range(1, 32)))
    assert e.value.clause == "length"


# weights

def test_foliage_weights():
    tw = [Burl(frozenset({i}), "twig2", "t") for i in range(3)]
    other = [Burl(frozenset({10 + i}), "other", "o") for i in range(2)]
    assert str(foliage_weight(Foliage(tw))) == "462x/314"
    assert foliage_weight(Foliage(tw)).same_as(3 * BETA1)
    assert foliage_weight(Foliage([])).same_as(0)
    assert str(foliage_weight(Foliage(tw[:1] + other))) == "302x/314"
    assert foliage_weight(Foliage(tw[:1] + other)).same_as(BETA1 + 2 * BETA2)


def test_foliage_disjointness():
    a = Burl(frozenset({1, 2}), "other", "o")
    assert Foliage([a, Burl(frozenset({3}), "other", "o")]).is_disjoint()
    assert not Foliage([a, Burl(frozenset({2, 3}), "other", "o")]).is_disjoint()


# constructive foliage

def _check_klee(G, Z):
    r = klee_foliage(G, Z)
    F = r.foliage
    assert F.is_disjoint() and F.vertices() <= frozenset(Z)
    assert foliage_weight(F) >= ALPHA * len(Z) + BETA2
    for b in F.burls:
        if b.kind != "other":
            assert is_twig(G, b.vertices) == b.kind
    return r


def test_klee_base_diamond():
    G = necklace(3)
    r = _check_klee(G, necklace_block(0))
    assert r.cases == {"base"} and len(r.foliage) == 1
    assert BETA1 >= ALPHA * 4 + BETA2


def test_klee_necklace_all_but_one_block():
    G = necklace(20)
    Z = frozenset(range(4, 80))
    r = _check_klee(G, Z)
    assert len(r.foliage) >= 2 and r.foliage.twigs == len(r.foliage)


def test_klee_long_chain_tail_fires_long_path():
    G = k4_chain(length=40)
    Z = frozenset(range(7, G.n))
    assert len(Z) >= 73
    r = _check_klee(G, Z)
    assert "long_path" in r.cases
    for b in r.foliage.burls:
        if b.certificate.startswith("tree_branch"):
            assert b.certificate == "tree_branch/k4chain@0"


def test_klee_cut_at_branch_vertex():
    G = prism()
    for v in (0, 1, 3, 4):
        G = chain_tail_replace(G, v, 3)
    r = _check_klee(G, frozenset(G.vertices()) - {5})
    assert "cut_at_t_star" in r.cases
    assert r.foliage.twigs == 4


def test_klee_preconditions():
    with pytest.raises(PreconditionFailed):
        klee_foliage(triangle_replace(petersen(), 0), range(4))
    G = necklace(3)
    with pytest.raises(PreconditionFailed):
        klee_foliage(G, [0])
    with pytest.raises(PreconditionFailed):
        klee_foliage(petersen(), frozenset(range(10)) - {0})


def test_klee_foliage_gives_switch_components():
    G = necklace(6)
    Z = frozenset(range(4, 24))
    r = _check_klee(G, Z)
    k = len(r.foliage)
    assert max_switch_components(G).count >= -(-k // 3)
