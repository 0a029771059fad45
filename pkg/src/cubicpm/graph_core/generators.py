"""Catalog of named test graphs."""
from __future__ import annotations

from itertools import combinations

from ..errors import BadParams
from .multigraph import CubicMultigraph, Multigraph

RAIL_PAIRS = (frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3}))


def k4() -> CubicMultigraph:
    return CubicMultigraph(list(combinations(range(4), 2)), 4)


def b3() -> CubicMultigraph:
    return CubicMultigraph([(0, 1)] * 3, 2)


def k33() -> CubicMultigraph:
    return CubicMultigraph([(i, 3 + j) for i in range(3) for j in range(3)], 6)


def petersen() -> CubicMultigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return CubicMultigraph(outer + spokes + inner, 10)


def prism() -> CubicMultigraph:
    """Top triangle 0,1,2; bottom triangle 3,4,5; rungs i -- i+3."""
    return CubicMultigraph([(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)], 6)


def alternating_sigma(length: int) -> list[frozenset]:
    return [RAIL_PAIRS[i % 3] for i in range(length)]


def k4_chain(sigma=None, length: int | None = None) -> CubicMultigraph:
    """Three rails crossed by a sequence of rungs.

    Position i carries an adjacent pair x_i (vertex 2i+1), y_i (vertex 2i+2)
    sitting on the two rails named by sigma[i]. Vertex 0 closes the left ends of
    all rails and vertex 2L+1 the right ends; an unused rail is a direct edge
    between the two end vertices.
    """
    if sigma is None:
        if length is None:
            raise BadParams("k4_chain needs sigma or length")
        sigma = alternating_sigma(length)
    sigma = [frozenset(s) for s in sigma]
    L = len(sigma)
    if L < 1:
        raise BadParams("k4_chain needs at least one position")
    for i, s in enumerate(sigma):
        if s not in RAIL_PAIRS:
            raise BadParams(f"sigma[{i}] = {sorted(s)} is not a pair of rails from {{1,2,3}}")
        if i and s == sigma[i - 1]:
            raise BadParams(f"sigma[{i}] repeats sigma[{i - 1}]")
    left, right = 0, 2 * L + 1
    rails = {1: [left], 2: [left], 3: [left]}
    edges = []
    for i, s in enumerate(sigma):
        x, y = 2 * i + 1, 2 * i + 2
        a, b = sorted(s)
        rails[a].append(x)
        rails[b].append(y)
        edges.append((x, y))
    for r in (1, 2, 3):
        seq = rails[r] + [right]
        edges.extend(zip(seq, seq[1:]))
    return CubicMultigraph(edges, 2 * L + 2)


def necklace(blocks: int) -> CubicMultigraph:
    """Cycle of diamonds; block i is a=4i, b=4i+1, c=4i+2, d=4i+3 and d_i -- a_{i+1}."""
    if blocks < 1:
        raise BadParams("necklace needs at least one block")
    edges = []
    for i in range(blocks):
        a, b, c, d = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        edges += [(a, b), (a, c), (b, c), (b, d), (c, d)]
    for i in range(blocks):
        edges.append((4 * i + 3, 4 * ((i + 1) % blocks)))
    return CubicMultigraph(edges, 4 * blocks)


def necklace_block(i: int) -> frozenset:
    return frozenset(range(4 * i, 4 * i + 4))


def digon_ring(length: int) -> CubicMultigraph:
    """Cycle of digons: p_i=2i, q_i=2i+1 with a double edge, q_i -- p_{i+1}."""
    if length < 2:
        raise BadParams("digon_ring needs at least two digons")
    edges = []
    for i in range(length):
        edges += [(2 * i, 2 * i + 1), (2 * i, 2 * i + 1), (2 * i + 1, 2 * ((i + 1) % length))]
    return CubicMultigraph(edges, 2 * length)


def triangle_replace(G: Multigraph, v: int) -> CubicMultigraph:
    """Expand vertex v into a triangle; v keeps its first incident edge."""
    if not 0 <= v < G.n:
        raise BadParams(f"vertex {v} out of range")
    inc = G.incident(v)
    if len(inc) != 3:
        raise BadParams("triangle_replace needs a degree-3 vertex")
    n = G.n
    new = {inc[1]: n, inc[2]: n + 1}
    edges = []
    for e, (a, b) in enumerate(G.edges):
        if e in new:
            w = G.other(e, v)
            edges.append((new[e], w))
        else:
            edges.append((a, b))
    edges += [(v, n), (n, n + 1), (v, n + 1)]
    return CubicMultigraph(edges, n + 2)


def chain_tail_replace(G: Multigraph, v: int, length: int) -> CubicMultigraph:
    """Replace v by k4_chain(length) with its left end vertex removed; v becomes its first port."""
    T = k4_chain(length=length)
    ports = T.neighbors(0)
    others = [u for u in range(1, T.n) if u != ports[0]]
    idx = {u: G.n + i for i, u in enumerate(others)}
    idx[ports[0]] = v
    edges, k = [], 0
    for x, y in G.edges:
        if v in (x, y):
            edges.append((idx[ports[k]], y if x == v else x))
            k += 1
        else:
            edges.append((x, y))
    if k != 3:
        raise BadParams("chain_tail_replace needs a degree-3 vertex without loops")
    edges += [(idx[x], idx[y]) for x, y in T.edges if 0 not in (x, y)]
    return CubicMultigraph(edges, G.n + T.n - 2)


def complete(n: int) -> Multigraph:
    return Multigraph(list(combinations(range(n), 2)), n)


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph([(i, a + j) for i in range(a) for j in range(b)], a + b)


def circulant(n: int, jumps) -> Multigraph:
    edges = set()
    for i in range(n):
        for j in jumps:
            u, v = i, (i + j) % n
            edges.add((min(u, v), max(u, v)))
    return Multigraph(sorted(edges), n)


def _parse_sigma(text: str) -> list[frozenset]:
    # "12,13,23" -> [{1,2},{1,3},{2,3}]
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if len(tok) != 2 or not tok.isdigit():
            raise BadParams(f"bad sigma token {tok!r}")
        out.append(frozenset(int(c) for c in tok))
    return out


CATALOG = ("K4", "B3", "K33", "petersen", "prism", "k4_chain", "necklace", "triangle_replace", "digon_ring")


def generate(name: str, *params) -> CubicMultigraph:
    """Dispatch by catalog id.

    ``k4_chain`` takes either an integer length (alternating rails) or a sigma
    string like ``"12,13,23"``; ``triangle_replace`` takes a base catalog name
    (or graph) and a vertex.
    """
    key = name.lower().replace("-", "_")
    if key == "k4":
        return k4()
    if key == "b3":
        return b3()
    if key in ("k33", "k3,3", "k3_3"):
        return k33()
    if key == "petersen":
        return petersen()
    if key == "prism":
        return prism()
    if key == "k4_chain":
        if not params:
            raise BadParams("k4_chain needs a length or sigma string")
        p = params[0]
        if isinstance(p, int) or (isinstance(p, str) and p.isdigit()):
            return k4_chain(length=int(p))
        if isinstance(p, str):
            return k4_chain(_parse_sigma(p))
        return k4_chain(p)
    if key == "necklace":
        if not params:
            raise BadParams("necklace needs a block count")
        return necklace(int(params[0]))
    if key == "digon_ring":
        if not params:
            raise BadParams("digon_ring needs a length")
        return digon_ring(int(params[0]))
    if key == "triangle_replace":
        if len(params) < 2:
            raise BadParams("triangle_replace needs a base graph and a vertex")
        base = params[0]
        if isinstance(base, str):
            base = generate(base, *params[2:])
        return triangle_replace(base, int(params[1]))
    raise BadParams(f"unknown catalog graph {name!r}")
