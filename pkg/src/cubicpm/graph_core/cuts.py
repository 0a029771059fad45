"""Edge cuts, small-cut enumeration and cyclic connectivity."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..errors import Disconnected, EmptySide
from .multigraph import Multigraph


@dataclass(frozen=True)
class EdgeCut:
    side: frozenset
    cut_edges: frozenset
    cyclic: bool
    inner: frozenset = field(default=frozenset(), compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.cut_edges)

    @property
    def parity(self) -> str:
        return "even" if self.size % 2 == 0 else "odd"

    @property
    def e_x(self) -> frozenset:
        """E_X = E(G|X) plus the cut edges."""
        return self.inner | self.cut_edges

    def other_side(self, G: Multigraph) -> frozenset:
        return frozenset(G.vertices()) - self.side

    def to_json(self) -> dict:
        return {
            "side": sorted(self.side),
            "edges": sorted(self.cut_edges),
            "size": self.size,
            "cyclic": self.cyclic,
        }


def edge_cut(G: Multigraph, X) -> EdgeCut:
    Xs = frozenset(X)
    if not Xs or len(Xs) >= G.n or not Xs <= frozenset(G.vertices()):
        raise EmptySide("X must be a nonempty proper subset of V(G)")
    rest = frozenset(G.vertices()) - Xs
    return EdgeCut(
        side=Xs,
        cut_edges=G.boundary(Xs),
        cyclic=G.has_cycle(Xs) and G.has_cycle(rest),
        inner=G.inner_edges(Xs),
    )


def _cut_labels(G: Multigraph) -> list[int]:
    """Cycle-space signature of every edge.

    Each non-tree edge of a BFS spanning tree owns one bit; a tree edge carries
    the XOR of the bits of the fundamental cycles through it. An edge set is in
    the cut space iff the XOR of its labels is zero.
    """
    n = G.n
    parent = [-1] * n
    parent_edge = [-1] * n
    depth = [0] * n
    seen = [False] * n
    tree = set()
    order = [0]
    seen[0] = True
    for v in order:
        for e in G.incident(v):
            w = G.other(e, v)
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                parent_edge[w] = e
                depth[w] = depth[v] + 1
                tree.add(e)
                order.append(w)
    if not all(seen):
        raise Disconnected("graph is not connected")
    labels = [0] * G.m
    bit = 0
    for e in range(G.m):
        if e in tree:
            continue
        b = 1 << bit
        bit += 1
        labels[e] = b
        u, v = G.edges[e]
        while u != v:
            if depth[u] < depth[v]:
                u, v = v, u
            labels[parent_edge[u]] ^= b
            u = parent[u]
    return labels


def _as_bond(G: Multigraph, F) -> EdgeCut | None:
    comps = G.components(removed_edges=F)
    if len(comps) != 2:
        return None
    side = frozenset(comps[1]) if 0 in comps[0] else frozenset(comps[0])
    if G.boundary(side) != frozenset(F):
        return None
    return EdgeCut(
        side=side,
        cut_edges=frozenset(F),
        cyclic=G.has_cycle(side) and G.has_cycle(frozenset(G.vertices()) - side),
        inner=G.inner_edges(side),
    )


def small_cuts(G: Multigraph, max_size: int = 3) -> list[EdgeCut]:
    """All bonds delta(X) with |delta(X)| <= max_size (max_size <= 3).

    Sides are reported as the component avoiding vertex 0. Order: by size,
    then by sorted edge ids.
    """
    if G.n <= 1:
        return []
    labels = _cut_labels(G)
    buckets: dict[int, list[int]] = {}
    for e, lab in enumerate(labels):
        buckets.setdefault(lab, []).append(e)
    candidates: list[tuple[int, ...]] = []
    if max_size >= 1:
        candidates += [(e,) for e in buckets.get(0, [])]
    if max_size >= 2:
        for lab, es in buckets.items():
            if lab:
                candidates += list(combinations(es, 2))
    if max_size >= 3:
        for a, b in combinations(range(G.m), 2):
            target = labels[a] ^ labels[b]
            if target == 0:
                continue
            for c in buckets.get(target, ()):
                if c > b:
                    candidates.append((a, b, c))
    out = []
    for F in candidates:
        cut = _as_bond(G, F)
        if cut is not None:
            out.append(cut)
    out.sort(key=lambda c: (c.size, sorted(c.cut_edges)))
    return out


def brute_force_cuts(G: Multigraph, max_size: int = 3) -> list[EdgeCut]:
    """Reference enumeration over all 2^(n-1) bipartitions; for n <= 16."""
    n = G.n
    found = {}
    rest = range(1, n)
    for mask in range(1, 1 << (n - 1)):
        X = frozenset(v for i, v in enumerate(rest) if mask >> i & 1)
        F = G.boundary(X)
        if len(F) > max_size or F in found:
            continue
        cut = _as_bond(G, F)
        if cut is not None:
            found[F] = cut
    return sorted(found.values(), key=lambda c: (c.size, sorted(c.cut_edges)))


@dataclass
class ConnectivityReport:
    bridgeless: bool
    bridges: list
    two_edge_cuts: list
    cyclic_three_edge_cuts: list
    cyclically_4_edge_connected: bool

    def to_json(self) -> dict:
        return {
            "bridgeless": self.bridgeless,
            "bridges": [sorted(c.cut_edges) for c in self.bridges],
            "two_edge_cuts": [c.to_json() for c in self.two_edge_cuts],
            "cyclic_three_edge_cuts": [c.to_json() for c in self.cyclic_three_edge_cuts],
            "cyclically_4_edge_connected": self.cyclically_4_edge_connected,
        }


def connectivity_report(G: Multigraph) -> ConnectivityReport:
    if not G.is_connected():
        raise Disconnected("connectivity_report needs a connected graph")
    cuts = small_cuts(G, 3)
    bridges = [c for c in cuts if c.size == 1]
    two = [c for c in cuts if c.size == 2]
    three = [c for c in cuts if c.size == 3 and c.cyclic]
    cyclic_small = [c for c in cuts if c.cyclic]
    return ConnectivityReport(
        bridgeless=not bridges,
        bridges=bridges,
        two_edge_cuts=two,
        cyclic_three_edge_cuts=three,
        cyclically_4_edge_connected=not cyclic_small,
    )


def cyclic_small_cuts(G: Multigraph) -> list[EdgeCut]:
    return [c for c in small_cuts(G, 3) if c.cyclic]


def is_cyclically_4_edge_connected(G: Multigraph) -> bool:
    return not cyclic_small_cuts(G)


def is_bridgeless(G: Multigraph) -> bool:
    """Every component is 2-edge-connected."""
    for comp in G.components():
        if len(comp) == 1:
            continue
        H, _, _ = G.induced(comp)
        if any(c.size == 1 for c in small_cuts(H, 1)):
            return False
    return True
