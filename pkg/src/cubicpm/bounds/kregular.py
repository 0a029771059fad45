"""From a k-regular graph to a cubic bridgeless one via three perfect matchings.

Exhaustive scans stand in for the averaging arguments: M1 is the first
perfect matching, M2 minimises |M1 & M2|, and M3 maximises the number of
vertices whose three incident matching edges are distinct.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from ..balanced import balanced_distribution
from ..errors import NoM3, PreconditionFailed
from ..graph_core.cuts import is_bridgeless
from ..graph_core.multigraph import Multigraph, suppress_degree_two
from ..matching import count_perfect_matchings, enumerate_perfect_matchings
from .constants import minimal_ceps


@dataclass
class KRegularReport:
    k: int
    n: int
    m: int
    distribution_support: int
    m1: frozenset
    m2: frozenset
    m3: frozenset
    overlap12: int
    degree3: int
    target: Fraction  # (1 - 1/k)(1 - 2/k) n
    reduced: Multigraph  # G''
    m_sub: int  # m(G')
    m_reduced: int  # m(G'')
    c: int

    @property
    def chain_ok(self) -> bool:
        """m(G) >= m(G') >= m(G'') >= 2^(|V(G'')|/c), and |V(G'')| is the degree-3 count, above target."""
        return (self.m >= self.m_sub >= self.m_reduced
                and self.m_reduced ** self.c >= 2 ** self.reduced.n
                and self.reduced.n == self.degree3 >= self.target)

    def to_json(self) -> dict:
        return {
            "k": self.k, "n": self.n, "m": self.m,
            "distribution_support": self.distribution_support,
            "M1": sorted(self.m1), "M2": sorted(self.m2), "M3": sorted(self.m3),
            "overlap12": self.overlap12, "degree3_vertices": self.degree3,
            "target": str(self.target),
            "reduced_n": self.reduced.n, "reduced_edges": [list(e) for e in self.reduced.edges],
            "m_sub": self.m_sub, "m_reduced": self.m_reduced,
            "bound": f"log2 m(G) >= {self.reduced.n}/{self.c}",
            "chain_ok": self.chain_ok,
        }


def _check_input(G: Multigraph, k: int):
    if k < 4:
        raise PreconditionFailed("k must be at least 4")
    if any(G.degree(v) != k for v in G.vertices()):
        raise PreconditionFailed(f"graph is not {k}-regular")
    if _edge_connectivity(G) < k - 1:
        raise PreconditionFailed(f"graph is not {k - 1}-edge-connected")
    if G.n % 2:
        raise PreconditionFailed("no perfect matching (odd order)")


def _edge_connectivity(G: Multigraph) -> int:
    """Parallel edges become capacities; min over max-flows from vertex 0."""
    H = nx.Graph()
    H.add_nodes_from(G.vertices())
    for u, v in G.edges:
        w = H.get_edge_data(u, v, {"capacity": 0})["capacity"]
        H.add_edge(u, v, capacity=w + 1)
    return min(nx.maximum_flow_value(H, 0, t) for t in G.vertices() if t)


def _distinct_vertices(G: Multigraph, M1, M2, M3) -> int:
    at = [[None] * 3 for _ in range(G.n)]
    for j, M in enumerate((M1, M2, M3)):
        for e in M:
            for v in G.edges[e]:
                at[v][j] = e
    return sum(1 for row in at if len(set(row)) == 3)


def kregular_construct(G: Multigraph, k: int) -> KRegularReport:
    _check_input(G, k)
    ms = enumerate_perfect_matchings(G)
    if not ms:
        raise PreconditionFailed("no perfect matching")
    dist = balanced_distribution(G, target=Fraction(1, k), family=ms)
    M1 = ms[0]
    M2 = min(ms, key=lambda M: len(M & M1))
    overlap = len(M2 & M1)
    assert 2 * k * overlap <= G.n, "averaging bound for M2 violated"
    target = Fraction((k - 1) * (k - 2) * G.n, k * k)
    best, M3 = -1, None
    for M in ms:
        c = _distinct_vertices(G, M1, M2, M)
        if c > best:
            best, M3 = c, M
    if best < target:
        raise NoM3(f"best M3 gives {best} vertices of degree three, need {target}")
    used = sorted(M1 | M2 | M3)
    sub = Multigraph([G.edges[e] for e in used], G.n)
    lone = {v for v in sub.vertices() if sub.degree(v) == 1}
    keep = [v for v in sub.vertices() if v not in lone]
    idx = {v: i for i, v in enumerate(keep)}
    trimmed = Multigraph([(idx[a], idx[b]) for a, b in sub.edges if a not in lone], len(keep))
    reduced, _ = suppress_degree_two(trimmed, drop_cycles=True)
    if any(reduced.degree(v) != 3 for v in reduced.vertices()) or not is_bridgeless(reduced):
        raise PreconditionFailed("reduced graph is not cubic and bridgeless")
    c = minimal_ceps()
    return KRegularReport(k, G.n, len(ms), len(dist.support), M1, M2, M3, overlap, best, target,
                          reduced, count_perfect_matchings(sub), count_perfect_matchings(reduced), c)
