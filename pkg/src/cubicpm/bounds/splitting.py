"""Splitting a cubic graph along a path v1 v2 v3 v4, canonical extensions, and the four-split count."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..burls import Burl, Foliage, is_twig
from ..errors import HypothesisFailed, NotAPath, UsesNewEdge
from ..graph_core.cuts import is_cyclically_4_edge_connected
from ..graph_core.multigraph import CubicMultigraph, Multigraph
from ..matching import enumerate_perfect_matchings


@dataclass
class SplitRecord:
    host: Multigraph
    path: tuple  # (v1, v2, v3, v4) in G
    v1p: int  # v1': neighbour of v2 other than v1, v3
    v4p: int  # v4': neighbour of v3 other than v2, v4
    graph: CubicMultigraph
    vertex_origin: list  # G' vertex -> G vertex
    edge_origin: list  # G' edge -> G edge id, or "new" / "new'"
    path_edges: dict = field(default_factory=dict)  # names like "12", "23", "1'2" -> G edge id

    @property
    def new_edge(self) -> int:
        return self.edge_origin.index("new")

    @property
    def new_edge_prime(self) -> int:
        return self.edge_origin.index("new'")

    def vertex_index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertex_origin)}

    def edge_index(self) -> dict:
        return {e: i for i, e in enumerate(self.edge_origin) if isinstance(e, int)}

    def to_json(self) -> dict:
        return {
            "path": list(self.path),
            "v1_prime": self.v1p,
            "v4_prime": self.v4p,
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges],
            "vertex_origin": self.vertex_origin,
            "edge_origin": self.edge_origin,
        }


def _one_edge(G, a, b, what):
    es = G.edges_between(a, b)
    if not es:
        raise NotAPath(f"{what}: {a} and {b} are not adjacent", clause="path")
    return es[0]


def split_path(G: Multigraph, v1, v2, v3, v4, check: bool = True) -> SplitRecord:
    path = (v1, v2, v3, v4)
    if len(set(path)) != 4:
        raise NotAPath("path vertices must be distinct", clause="path")
    e12 = _one_edge(G, v1, v2, "v1v2")
    e23 = _one_edge(G, v2, v3, "v2v3")
    e34 = _one_edge(G, v3, v4, "v3v4")
    if check:
        if G.n < 6:
            raise HypothesisFailed(f"|V(G)| = {G.n} < 6", clause="size")
        if not is_cyclically_4_edge_connected(G):
            raise HypothesisFailed("G is not cyclically 4-edge-connected", clause="connectivity")
    rest2 = [e for e in G.incident(v2) if e not in (e12, e23)]
    rest3 = [e for e in G.incident(v3) if e not in (e23, e34)]
    if len(rest2) != 1 or len(rest3) != 1:
        raise HypothesisFailed("v2 or v3 does not have exactly one further edge", clause="cubic")
    e1p2, e34p = rest2[0], rest3[0]
    v1p, v4p = G.other(e1p2, v2), G.other(e34p, v3)
    if v1p in (v2, v3) or v4p in (v2, v3) or v1p == v4p:
        raise HypothesisFailed("splitting would create a loop", clause="loop")
    keep = [v for v in G.vertices() if v not in (v2, v3)]
    idx = {v: i for i, v in enumerate(keep)}
    edges, eorig = [], []
    for e, (a, b) in enumerate(G.edges):
        if a in (v2, v3) or b in (v2, v3):
            continue
        edges.append((idx[a], idx[b]))
        eorig.append(e)
    edges += [(idx[v1], idx[v4]), (idx[v1p], idx[v4p])]
    eorig += ["new", "new'"]
    H = CubicMultigraph(edges, len(keep))
    names = {"12": e12, "23": e23, "34": e34, "1'2": e1p2, "34'": e34p}
    return SplitRecord(G, path, v1p, v4p, H, keep, eorig, names)


def canonical_extension(Mp, r: SplitRecord) -> frozenset:
    Mp = set(Mp)
    if r.new_edge in Mp:
        raise UsesNewEdge("M' contains v1v4; no canonical extension")
    M = {r.edge_origin[e] for e in Mp if isinstance(r.edge_origin[e], int)}
    if r.new_edge_prime in Mp:
        M |= {r.path_edges["1'2"], r.path_edges["34'"]}
    else:
        M.add(r.path_edges["23"])
    return frozenset(M)


def restriction(M, r: SplitRecord) -> frozenset | None:
    """The M' of G' avoiding v1v4 whose canonical extension is M, if any."""
    M = set(M)
    eidx = r.edge_index()
    shared = {eidx[e] for e in M if e in eidx}
    pe = r.path_edges
    if pe["23"] in M:
        return frozenset(shared)
    if pe["1'2"] in M and pe["34'"] in M:
        return frozenset(shared | {r.new_edge_prime})
    return None


def map_foliage(F: Foliage, r: SplitRecord) -> Foliage:
    """A foliage of G from one of G': drop burls holding both ends of a new edge, relabel the rest."""
    H = r.graph
    ends = [set(H.edges[r.new_edge]), set(H.edges[r.new_edge_prime])]
    out = []
    for b in F.burls:
        if any(e <= b.vertices for e in ends):
            continue
        vs = frozenset(r.vertex_origin[v] for v in b.vertices)
        out.append(Burl(vs, is_twig(r.host, vs) or "other", b.certificate))
    return Foliage(out)


@dataclass
class FourSplitReport:
    edge: int
    u: int
    v: int
    w: int
    paths: list
    counts: list  # per split: perfect matchings of G_i containing e
    S: int
    count_e: int
    membership: list  # (matching of G, [split indices it extends from])

    @property
    def identity_holds(self) -> bool:
        return 3 * self.count_e == self.S and all(len(ix) == 3 for _, ix in self.membership)

    def to_json(self) -> dict:
        return {
            "edge": self.edge, "u": self.u, "v": self.v, "w": self.w,
            "paths": [list(p) for p in self.paths],
            "counts": self.counts, "S": self.S, "count_e": self.count_e,
            "identity_holds": self.identity_holds,
            "membership": [{"matching": sorted(M), "splits": ix} for M, ix in self.membership],
        }


def four_split_identity(G: Multigraph, e: int) -> FourSplitReport:
    if G.n < 6:
        raise HypothesisFailed(f"|V(G)| = {G.n} < 6", clause="size")
    if not is_cyclically_4_edge_connected(G):
        raise HypothesisFailed("G is not cyclically 4-edge-connected", clause="connectivity")
    u, v = G.edges[e]
    w = min(x for x in G.neighbors(v) if x != u)
    w1, w2 = sorted(x for x in G.neighbors(w) if x != v)
    paths = []
    for wi in (w1, w2):
        xi, yi = sorted(x for x in G.neighbors(wi) if x != w)
        paths += [(v, w, wi, xi), (v, w, wi, yi)]
    records = [split_path(G, *p) for p in paths]
    counts = []
    for r in records:
        ei = r.edge_index()[e]
        counts.append(sum(1 for M in enumerate_perfect_matchings(r.graph) if ei in M))
    with_e = [M for M in enumerate_perfect_matchings(G) if e in M]
    membership = []
    for M in with_e:
        ix = []
        for i, r in enumerate(records):
            Mp = restriction(M, r)
            if Mp is not None:
                assert canonical_extension(Mp, r) == M
                ix.append(i)
        membership.append((M, ix))
    return FourSplitReport(e, u, v, w, paths, counts, sum(counts), len(with_e), membership)
