"""Desk-scale check of the two-way theorem and the m* = 1 search.

For a cubic bridgeless G on n vertices at least one holds:
S1, every edge lies in at least 2^(n/c) perfect matchings;
S2, some pair of perfect matchings has a symmetric difference with at least n/c cycles.
Both are decided with integers: S1 iff (m*)^c >= 2^n, S2 iff c * cycles >= n.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import SizeLimit
from ..graph_core.enumeration import cubic_bridgeless_multigraphs
from ..graph_core.multigraph import Multigraph
from ..matching import enumerate_perfect_matchings, flip_matchings, matching_counts, max_switch_components
from .constants import minimal_ceps


@dataclass
class Main2Verdict:
    n: int
    c: int
    m: int
    m_star: int
    components: int
    s1: bool
    s2: bool
    flipped: int  # distinct matchings built by flipping the witness cycles
    witness: tuple

    @property
    def holds(self) -> bool:
        return self.s1 or self.s2

    def to_json(self) -> dict:
        return {
            "n": self.n, "c": self.c, "m": self.m, "m_star": self.m_star,
            "max_switch_components": self.components,
            "n_over_c": f"{self.n}/{self.c}",
            "S1": self.s1, "S2": self.s2, "holds": self.holds,
            "flipped_matchings": self.flipped,
            "flip_bound_ok": self.flipped == 2 ** self.components and self.flipped <= self.m,
            "near_vacuous": self.n < self.c,
            "witness": [sorted(self.witness[0]), sorted(self.witness[1])],
        }


def main2_verdict(G: Multigraph, c: int | None = None, max_vertices: int = 24) -> Main2Verdict:
    if G.n > max_vertices:
        raise SizeLimit(f"verdict enumerates all perfect matchings; n={G.n} exceeds {max_vertices}", cap=max_vertices)
    c = minimal_ceps() if c is None else c
    ms = enumerate_perfect_matchings(G)
    counts = matching_counts(G, ms)
    sw = max_switch_components(G, ms)
    s1 = counts.m_star ** c >= 2 ** G.n
    s2 = c * sw.count >= G.n
    flips = set(flip_matchings(G, *sw.pair))
    return Main2Verdict(G.n, c, counts.m, counts.m_star, sw.count, s1, s2, len(flips), sw.pair)


@dataclass
class MStarOne:
    graph: Multigraph
    edge: int  # lies in exactly one perfect matching

    def to_json(self) -> dict:
        return {"n": self.graph.n, "edges": [list(e) for e in self.graph.edges], "edge": self.edge}


def search_mstar1(n: int) -> list:
    """Isomorphism classes of cubic bridgeless multigraphs on n vertices with m* = 1."""
    if n > 14:
        raise SizeLimit("search_mstar1 enumerates classes only up to n=14", cap=14)
    out = []
    for G in cubic_bridgeless_multigraphs(n):
        mc = matching_counts(G)
        if mc.m_star == 1:
            e = min(i for i, k in mc.per_edge.items() if k == 1)
            out.append(MStarOne(G, e))
    return out
