from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from ..errors import BadIndex, LoopEdge, NotCubic


class Multigraph:
    """Loopless undirected multigraph with stable integer edge ids.

    Vertices are ``0..n-1``; edge ``i`` is ``edges[i]`` stored as ``(min, max)``.
    Parallel edges are distinct ids. Instances are immutable after construction.
    """

    __slots__ = ("vertex_count", "edges", "adjacency", "_hash")

    def __init__(self, edge_list: Iterable[Sequence[int]], vertex_count: int):
        n = int(vertex_count)
        if n < 0:
            raise BadIndex(f"negative vertex count {n}")
        edges = []
        adj: list[list[int]] = [[] for _ in range(n)]
        for i, pair in enumerate(edge_list):
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < n and 0 <= v < n):
                raise BadIndex(f"edge {i} = ({u}, {v}) out of range for n={n}")
            if u == v:
                raise LoopEdge(f"edge {i} is a loop at vertex {u}")
            if u > v:
                u, v = v, u
            edges.append((u, v))
            adj[u].append(i)
            adj[v].append(i)
        object.__setattr__(self, "vertex_count", n)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "adjacency", tuple(tuple(a) for a in adj))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("graphs are immutable")

    # basic accessors
    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.vertex_count)

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.edges[e]

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def incident(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> list[int]:
        return [self.other(e, v) for e in self.adjacency[v]]

    def edges_between(self, u: int, v: int) -> list[int]:
        return [e for e in self.adjacency[u] if self.other(e, u) == v]

    def multiplicity(self, u: int, v: int) -> int:
        return len(self.edges_between(u, v))

    # vertex-set queries
    def boundary(self, X: Iterable[int]) -> frozenset[int]:
        """delta(X): edges with exactly one end in X."""
        Xs = set(X)
        return frozenset(e for v in Xs for e in self.adjacency[v] if self.other(e, v) not in Xs)

    def inner_edges(self, X: Iterable[int]) -> frozenset[int]:
        """E(G|X)."""
        Xs = set(X)
        return frozenset(e for v in Xs for e in self.adjacency[v] if self.other(e, v) in Xs)

    def touching_edges(self, X: Iterable[int]) -> frozenset[int]:
        """E_X: edges with at least one end in X."""
        return frozenset(e for v in set(X) for e in self.adjacency[v])

    def components(self, vertices: Iterable[int] | None = None, removed_edges=()) -> list[list[int]]:
        allowed = set(self.vertices()) if vertices is None else set(vertices)
        removed = set(removed_edges)
        seen: set[int] = set()
        comps = []
        for s in sorted(allowed):
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                v = queue.popleft()
                for e in self.adjacency[v]:
                    if e in removed:
                        continue
                    w = self.other(e, v)
                    if w in allowed and w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.vertex_count == 0 or len(self.components()) == 1

    def has_cycle(self, X: Iterable[int]) -> bool:
        """True iff the induced subgraph G|X contains a cycle (2-cycles count)."""
        Xs = set(X)
        if not Xs:
            return False
        inner = len(self.inner_edges(Xs))
        return inner > len(Xs) - len(self.components(Xs))

    def induced(self, X: Iterable[int]) -> tuple["Multigraph", list[int], list[int]]:
        """G|X relabelled to 0..|X|-1, with vertex and edge maps back to G."""
        order = sorted(set(X))
        index = {v: i for i, v in enumerate(order)}
        emap = sorted(self.inner_edges(order))
        H = Multigraph([(index[self.edges[e][0]], index[self.edges[e][1]]) for e in emap], len(order))
        return H, order, emap

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        """Vertex v becomes perm[v]; edge ids are kept."""
        cls = type(self)
        return cls([(perm[u], perm[v]) for u, v in self.edges], self.vertex_count)

    def degree_sequence(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def sorted_edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.vertex_count, self.edges)))
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}(n={self.vertex_count}, m={len(self.edges)})"

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        for u, v in self.edges:
            if g.has_edge(u, v):
                g[u][v]["mult"] += 1
            else:
                g.add_edge(u, v, mult=1)
        return g


class CubicMultigraph(Multigraph):
    """A loopless 3-regular multigraph (necessarily on an even number of vertices)."""

    __slots__ = ()

    def __init__(self, edge_list, vertex_count):
        super().__init__(edge_list, vertex_count)
        for v in range(self.vertex_count):
            if len(self.adjacency[v]) != 3:
                raise NotCubic(f"vertex {v} has degree {len(self.adjacency[v])}")
        # odd n is impossible once all degrees are 3 (handshake), kept as a guard
        if self.vertex_count % 2:
            raise NotCubic("cubic graphs have an even number of vertices")


def build_graph(edge_list, vertex_count: int) -> CubicMultigraph:
    return CubicMultigraph(edge_list, vertex_count)


def as_cubic(G: Multigraph) -> CubicMultigraph:
    if isinstance(G, CubicMultigraph):
        return G
    return CubicMultigraph(G.edges, G.vertex_count)


def suppress_degree_two(G: Multigraph, drop_cycles: bool = False) -> tuple[Multigraph, list[int]]:
    """Replace every maximal path through degree-2 vertices by a single edge.

    Returns the new graph and the list of surviving original vertex ids.
    Components that are pure cycles of degree-2 vertices raise unless
    ``drop_cycles`` is set, in which case they are removed.
    """
    keep = [v for v in G.vertices() if G.degree(v) != 2]
    index = {v: i for i, v in enumerate(keep)}
    used: set[int] = set()
    new_edges = []
    for v in keep:
        for e in G.incident(v):
            if e in used:
                continue
            used.add(e)
            prev, cur = v, G.other(e, v)
            last_edge = e
            while G.degree(cur) == 2:
                nxt = [f for f in G.incident(cur) if f != last_edge]
                last_edge = nxt[0]
                used.add(last_edge)
                prev, cur = cur, G.other(last_edge, cur)
            if cur == v:
                raise LoopEdge(f"suppression creates a loop at vertex {v}")
            new_edges.append((index[v], index[cur]))
    leftover = [v for v in G.vertices() if G.degree(v) == 2 and not (set(G.incident(v)) <= used)]
    if leftover and not drop_cycles:
        raise NotCubic("a component is a bare cycle of degree-2 vertices")
    return Multigraph(new_edges, len(keep)), keep
