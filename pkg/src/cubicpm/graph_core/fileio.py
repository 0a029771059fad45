"""Plain-text graph format.

First non-comment line ``n m``, then ``m`` lines ``u v`` (0-indexed). Lines
starting with ``#`` are ignored; repeated pairs are parallel edges.
"""
from __future__ import annotations

import hashlib

from ..errors import BadParams
from .multigraph import CubicMultigraph, Multigraph


def parse_graph(text: str, cubic: bool = True) -> Multigraph:
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows:
        raise BadParams("empty graph file")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise BadParams(f"malformed graph file: {exc}") from None
    if len(edges) != m:
        raise BadParams(f"header announces {m} edges, found {len(edges)}")
    cls = CubicMultigraph if cubic else Multigraph
    return cls(edges, n)


def format_graph(G: Multigraph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines += [f"{u} {v}" for u, v in sorted(G.edges)]
    return "\n".join(lines) + "\n"


def canonical_file_order(G: Multigraph) -> Multigraph:
    """The graph as it reads back from :func:`format_graph` (edge ids re-sorted)."""
    return type(G)(sorted(G.edges), G.n)


def read_graph(path: str, cubic: bool = True) -> Multigraph:
    import sys

    if path == "-":
        return parse_graph(sys.stdin.read(), cubic=cubic)
    with open(path) as fh:
        return parse_graph(fh.read(), cubic=cubic)


def graph_digest(G: Multigraph) -> str:
    return hashlib.sha256(format_graph(G).encode()).hexdigest()
