"""Small-cut-decompositions (T, phi), hubs, refinement and maximisation."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..errors import CubicPMError, EmptyPreimage, PreconditionFailed
from ..graph_core.cuts import EdgeCut, cyclic_small_cuts, edge_cut, is_cyclically_4_edge_connected, small_cuts
from ..graph_core.multigraph import CubicMultigraph, Multigraph


class InvalidDecomposition(CubicPMError, ValueError):
    pass


@dataclass
class SmallCutDecomposition:
    tree_n: int
    tree_edges: list  # [(a, b)], index = tree-edge id
    phi: list  # phi[v] = tree vertex of graph vertex v

    def copy(self) -> "SmallCutDecomposition":
        return SmallCutDecomposition(self.tree_n, list(self.tree_edges), list(self.phi))

    def preimage(self, t) -> frozenset:
        return frozenset(v for v, s in enumerate(self.phi) if s == t)

    def preimage_of(self, ts) -> frozenset:
        ts = set(ts)
        return frozenset(v for v, s in enumerate(self.phi) if s in ts)

    def adjacency(self) -> list:
        adj = [[] for _ in range(self.tree_n)]
        for f, (a, b) in enumerate(self.tree_edges):
            adj[a].append((b, f))
            adj[b].append((a, f))
        return adj

    def degree(self, t) -> int:
        return sum(1 for a, b in self.tree_edges if t in (a, b))

    def leaves(self) -> list:
        return [t for t in range(self.tree_n) if self.degree(t) == 1]

    def side(self, f, toward=1) -> set:
        """Tree vertices on the side of edge f containing its endpoint ``toward``."""
        adj = self.adjacency()
        start = self.tree_edges[f][toward]
        seen = {start}
        stack = [start]
        while stack:
            a = stack.pop()
            for b, g in adj[a]:
                if g != f and b not in seen:
                    seen.add(b)
                    stack.append(b)
        return seen

    def components_without(self, T0) -> list:
        """Components of T - T0 as (tree vertex set, attaching tree-edge id), ordered by edge id."""
        T0 = set(T0)
        out = []
        for f, (a, b) in enumerate(self.tree_edges):
            if (a in T0) != (b in T0):
                out.append((self.side(f, 1 if a in T0 else 0), f))
        return out

    def cut_of_edge(self, G: Multigraph, f) -> EdgeCut:
        return edge_cut(G, self.preimage_of(self.side(f, 1)))

    def validate(self, G: Multigraph) -> bool:
        if not self.tree_edges:
            raise InvalidDecomposition("tree has no edges")
        if len(self.tree_edges) != self.tree_n - 1:
            raise InvalidDecomposition("tree edge count is not |V(T)| - 1")
        if len(self.side(0, 0) | self.side(0, 1)) != self.tree_n:
            raise InvalidDecomposition("tree is not connected")
        if len(self.phi) != G.n or any(not 0 <= s < self.tree_n for s in self.phi):
            raise InvalidDecomposition("phi is not a map V(G) -> V(T)")
        for t in range(self.tree_n):
            if len(self.preimage(t)) + self.degree(t) < 3:
                raise InvalidDecomposition(f"tree vertex {t} violates |phi^-1(t)| + deg(t) >= 3")
        for f in range(len(self.tree_edges)):
            X = self.preimage_of(self.side(f, 1))
            if not X or len(X) == G.n or len(G.boundary(X)) not in (2, 3):
                raise InvalidDecomposition(f"tree edge {f} does not induce a 2- or 3-edge-cut")
        return True

    def refines(self, Y) -> bool:
        leaves = {self.preimage(t) for t in self.leaves()}
        return all(frozenset(y) in leaves for y in Y)

    def to_json(self, G: Multigraph | None = None) -> dict:
        out = {
            "tree_n": self.tree_n,
            "tree_edges": [list(e) for e in self.tree_edges],
            "preimages": {str(t): sorted(self.preimage(t)) for t in range(self.tree_n)},
        }
        if G is not None:
            out["cut_sizes"] = [self.cut_of_edge(G, f).size for f in range(len(self.tree_edges))]
        return out


@dataclass
class Quotient:
    """G with each component X_i of T - T0 collapsed to one vertex s_i.

    Collapsed vertices keep degree |delta(X_i)|, so a 2-cut leaves a
    degree-2 vertex (the subdivided new edge).
    """

    graph: Multigraph
    vertex_origin: list  # graph vertex or None
    edge_origin: list  # every quotient edge is an edge of G
    parts: list = field(default_factory=list)  # (quotient vertex, tree vertex set, attaching edge, X_i)

    def part_of(self, q):
        for p in self.parts:
            if p[0] == q:
                return p
        return None


def quotient(G: Multigraph, d: SmallCutDecomposition, T0) -> Quotient:
    T0 = set(T0)
    X0 = sorted(d.preimage_of(T0))
    qid = {v: i for i, v in enumerate(X0)}
    parts = []
    for k, (tv, f) in enumerate(d.components_without(T0)):
        s = len(X0) + k
        Xi = d.preimage_of(tv)
        for v in Xi:
            qid[v] = s
        parts.append((s, frozenset(tv), f, Xi))
    edges, eorig = [], []
    for e, (u, v) in enumerate(G.edges):
        a, b = qid[u], qid[v]
        if a == b and a >= len(X0):
            continue
        edges.append((a, b))
        eorig.append(e)
    H = Multigraph(edges, len(X0) + len(parts))
    return Quotient(H, X0 + [None] * len(parts), eorig, parts)


@dataclass
class Hub:
    graph: CubicMultigraph
    vertex_origin: list  # graph vertex, or ("new", tree edge id) for a 3-cut vertex
    edge_origin: list  # graph edge, or ("new", tree edge id) for a 2-cut edge


def hub(G: Multigraph, d: SmallCutDecomposition, T0) -> Hub:
    """The hub of G at the subtree T0: collapse each outer component, then suppress 2-cut vertices."""
    T0 = set(T0) if not isinstance(T0, int) else {T0}
    if not d.preimage_of(T0):
        raise EmptyPreimage("hub needs phi^-1(T0) to be nonempty")
    q = quotient(G, d, T0)
    H = q.graph
    tag = {p[0]: ("new", p[2]) for p in q.parts}
    vorig = [q.vertex_origin[v] if q.vertex_origin[v] is not None else tag[v] for v in H.vertices()]
    edges = {j: list(uv) for j, uv in enumerate(H.edges)}
    eorig = {j: q.edge_origin[j] for j in edges}
    inc = {v: set(H.incident(v)) for v in H.vertices()}
    next_id = H.m
    dropped = set()
    for s, _, f, _ in q.parts:
        if len(inc[s]) != 2:
            continue
        e1, e2 = sorted(inc[s])
        a = edges[e1][0] if edges[e1][1] == s else edges[e1][1]
        b = edges[e2][0] if edges[e2][1] == s else edges[e2][1]
        for e, w in ((e1, a), (e2, b)):
            inc[w].discard(e)
            del edges[e], eorig[e]
        inc[s] = set()
        dropped.add(s)
        if a == b:
            raise InvalidDecomposition("hub suppression produced a loop")
        edges[next_id] = [a, b]
        eorig[next_id] = ("new", f)
        inc[a].add(next_id)
        inc[b].add(next_id)
        next_id += 1
    keep = [v for v in H.vertices() if v not in dropped]
    idx = {v: i for i, v in enumerate(keep)}
    order = sorted(edges)
    graph = CubicMultigraph([(idx[edges[j][0]], idx[edges[j][1]]) for j in order], len(keep))
    return Hub(graph, [vorig[v] for v in keep], [eorig[j] for j in order])


def refine_decomposition(G: Multigraph, Y) -> SmallCutDecomposition:
    Ys = [frozenset(y) for y in Y]
    seen = set()
    for y in Ys:
        if len(y) < 2:
            raise PreconditionFailed("every element of Y needs at least 2 vertices")
        if len(G.boundary(y)) not in (2, 3):
            raise PreconditionFailed("every element of Y needs |delta(Y)| in {2, 3}")
        if seen & y:
            raise PreconditionFailed("elements of Y must be disjoint")
        seen |= y
    n = G.n
    if not Ys:
        cuts = cyclic_small_cuts(G)
        if not cuts:
            raise PreconditionFailed("Y is empty and G is cyclically 4-edge-connected")
        side = cuts[0].side
        return _checked(G, SmallCutDecomposition(2, [(0, 1)], [0 if v in side else 1 for v in range(n)]))
    rest = frozenset(range(n)) - seen
    if len(Ys) == 1:
        if len(rest) <= 1:
            raise PreconditionFailed("a single Y needs more than one vertex outside it")
        return _checked(G, SmallCutDecomposition(2, [(0, 1)], [0 if v in Ys[0] else 1 for v in range(n)]))
    if len(Ys) == 2 and not rest:
        return _checked(G, SmallCutDecomposition(2, [(0, 1)], [0 if v in Ys[0] else 1 for v in range(n)]))
    # star: centre 0, leaf i+1 for Y_i (a path when |Y| = 2)
    phi = [0] * n
    for i, y in enumerate(Ys):
        for v in y:
            phi[v] = i + 1
    return _checked(G, SmallCutDecomposition(len(Ys) + 1, [(0, i + 1) for i in range(len(Ys))], phi))


def _checked(G, d):
    try:
        d.validate(G)
    except InvalidDecomposition as exc:
        raise PreconditionFailed(str(exc)) from None
    return d


def split_vertex(G: Multigraph, d: SmallCutDecomposition, t: int) -> SmallCutDecomposition | None:
    """Split t along a cyclic cut of size <= 3 in the subdivided hub, if one exists."""
    q = quotient(G, d, {t})
    cuts = [c for c in small_cuts(q.graph, 3) if c.cyclic and c.size >= 2]
    if not cuts:
        return None
    Z = cuts[0].side
    new_t = d.tree_n
    out = d.copy()
    out.tree_n += 1
    for v in d.preimage(t):
        if q.vertex_origin.index(v) not in Z:
            out.phi[v] = new_t
    for s, _, f, _ in q.parts:
        if s not in Z:
            a, b = out.tree_edges[f]
            out.tree_edges[f] = (new_t, b) if a == t else (a, new_t)
    out.tree_edges.append((t, new_t))
    out.validate(G)
    return out


def maximize_decomposition(G: Multigraph, d: SmallCutDecomposition, Y=()) -> SmallCutDecomposition:
    """Split tree vertices until each one is empty, an element of Y, or has a cyclically 4-edge-connected hub.

    After a split only the two halves can change their hubs, so the worklist
    re-queues just those.
    """
    Ys = {frozenset(y) for y in Y}
    cur = d.copy()
    cur.validate(G)
    work = deque(range(cur.tree_n))
    while work:
        t = work.popleft()
        X0 = cur.preimage(t)
        if not X0 or X0 in Ys:
            continue
        nxt = split_vertex(G, cur, t)
        if nxt is None:
            continue
        cur = nxt
        work.extend((t, cur.tree_n - 1))
    return cur


def trichotomy(G: Multigraph, d: SmallCutDecomposition, Y=()) -> list:
    """Per tree vertex: "empty", "in_Y", "c4ec_hub", or "violation"."""
    Ys = {frozenset(y) for y in Y}
    out = []
    for t in range(d.tree_n):
        X0 = d.preimage(t)
        if not X0:
            out.append("empty")
        elif X0 in Ys:
            out.append("in_Y")
        elif is_cyclically_4_edge_connected(hub(G, d, t).graph):
            out.append("c4ec_hub")
        else:
            out.append("violation")
    return out
