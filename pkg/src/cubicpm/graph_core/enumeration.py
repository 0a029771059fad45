"""Exhaustive generation of connected bridgeless cubic multigraphs up to isomorphism.

Every such graph on n+2 vertices arises from one on n vertices by subdividing
two edges (or one edge twice) and joining the two subdivision vertices; the
generator starts from B3 and closes under that operation.
"""
from __future__ import annotations

from functools import lru_cache

from ..errors import SizeLimit
from .generators import b3
from .iso import IsoClasses
from .multigraph import CubicMultigraph


def insert_edge(G: CubicMultigraph, e: int, f: int) -> CubicMultigraph:
    p, q = G.n, G.n + 1
    edges = [uv for i, uv in enumerate(G.edges) if i not in (e, f)]
    a, b = G.edges[e]
    if e == f:
        edges += [(a, p), (p, q), (q, b), (p, q)]
    else:
        c, d = G.edges[f]
        edges += [(a, p), (p, b), (c, q), (q, d), (p, q)]
    return CubicMultigraph(edges, G.n + 2)


@lru_cache(maxsize=None)
def _level(n: int) -> tuple:
    if n == 2:
        return (b3(),)
    classes = IsoClasses()
    for G in _level(n - 2):
        for e in range(G.m):
            for f in range(e, G.m):
                classes.add(insert_edge(G, e, f))
    return tuple(classes.graphs)


def cubic_bridgeless_multigraphs(n: int, max_n: int = 14) -> list[CubicMultigraph]:
    """All connected bridgeless loopless cubic multigraphs on n vertices, one per class."""
    if n % 2 or n < 2:
        return []
    if n > max_n:
        raise SizeLimit(f"exhaustive generation capped at n={max_n}", cap=max_n)
    return list(_level(n))
