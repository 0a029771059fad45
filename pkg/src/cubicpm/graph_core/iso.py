"""Isomorphism testing for loopless multigraphs.

An invariant (closed-walk counts refined by colour refinement) buckets graphs;
exact tests inside a bucket use networkx's VF2 matcher with edge multiplicities.
"""
from __future__ import annotations

import hashlib

import numpy as np

from .multigraph import Multigraph


def _adjacency_matrix(G: Multigraph) -> np.ndarray:
    A = np.zeros((G.n, G.n), dtype=np.int64)
    for u, v in G.edges:
        A[u, v] += 1
        A[v, u] += 1
    return A


def vertex_colours(G: Multigraph, walk_len: int = 6, rounds: int = 3) -> list:
    if G.n == 0:
        return []
    A = _adjacency_matrix(G)
    # closed-walk counts of length 2..walk_len; capped powers stay within int64 for our sizes
    P = A.copy()
    diag = []
    for _ in range(2, walk_len + 1):
        P = P @ A
        diag.append(np.diag(P).tolist())
    colours = [(tuple(sorted(G.multiplicity(v, w) for w in set(G.neighbors(v)))),) + tuple(d[v] for d in diag)
               for v in G.vertices()]
    for _ in range(rounds):
        table = {c: i for i, c in enumerate(sorted(set(colours)))}
        ids = [table[c] for c in colours]
        colours = [(ids[v], tuple(sorted(ids[G.other(e, v)] for e in G.incident(v)))) for v in G.vertices()]
    return colours


def invariant(G: Multigraph) -> str:
    cols = vertex_colours(G)
    payload = repr((G.n, G.m, sorted(G.degree_sequence()), sorted(map(repr, cols))))
    return hashlib.sha1(payload.encode()).hexdigest()


def is_isomorphic(G: Multigraph, H: Multigraph) -> bool:
    if G.n != H.n or G.m != H.m or sorted(G.degree_sequence()) != sorted(H.degree_sequence()):
        return False
    import networkx as nx

    return nx.is_isomorphic(G.to_networkx(), H.to_networkx(), edge_match=lambda a, b: a["mult"] == b["mult"])


class IsoClasses:
    """Collects graphs up to isomorphism; ``add`` returns (index, is_new)."""

    def __init__(self):
        self.graphs: list[Multigraph] = []
        self._buckets: dict[str, list[int]] = {}

    def find(self, G: Multigraph, key: str | None = None):
        key = key or invariant(G)
        for idx in self._buckets.get(key, ()):
            if is_isomorphic(G, self.graphs[idx]):
                return idx
        return None

    def add(self, G: Multigraph) -> tuple[int, bool]:
        key = invariant(G)
        idx = self.find(G, key)
        if idx is not None:
            return idx, False
        self.graphs.append(G)
        self._buckets.setdefault(key, []).append(len(self.graphs) - 1)
        return len(self.graphs) - 1, True

    def __len__(self):
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)


class IsoMemo:
    """Dictionary keyed by isomorphism class."""

    def __init__(self):
        self._classes = IsoClasses()
        self._values: list = []

    def get(self, G: Multigraph, default=None):
        idx = self._classes.find(G)
        return default if idx is None else self._values[idx]

    def __contains__(self, G):
        return self._classes.find(G) is not None

    def put(self, G: Multigraph, value):
        idx, new = self._classes.add(G)
        if new:
            self._values.append(value)
        else:
            self._values[idx] = value
