from __future__ import annotations

from dataclasses import dataclass

from .multigraph import Multigraph


@dataclass(frozen=True)
class TriangleRecord:
    vertices: frozenset
    edges: frozenset
    relevant: bool

    @property
    def relevance(self) -> str:
        return "relevant" if self.relevant else "irrelevant"


def short_cycles(G: Multigraph, max_len: int = 4, min_len: int = 3) -> list[tuple[tuple[int, ...], frozenset]]:
    """All cycles of length in [min_len, max_len] as (vertex tuple, edge-id set).

    A cycle is identified by its edge set, so parallel edges give distinct cycles.
    """
    found: dict[frozenset, tuple[int, ...]] = {}

    def extend(start, path, used):
        v = path[-1]
        for e in G.incident(v):
            if e in used:
                continue
            w = G.other(e, v)
            if w == start and len(path) >= min_len:
                es = frozenset(used | {e})
                if es not in found:
                    found[es] = tuple(path)
            elif w > start and w not in path and len(path) < max_len:
                extend(start, path + [w], used | {e})

    for s in G.vertices():
        extend(s, [s], frozenset())
    out = [(vs, es) for es, vs in found.items()]
    out.sort(key=lambda c: (len(c[0]), sorted(c[1])))
    return out


def classify_triangles(G: Multigraph) -> list[TriangleRecord]:
    cycles = short_cycles(G, 4, 3)
    records = []
    for vs, es in cycles:
        if len(vs) != 3:
            continue
        relevant = any(len(es & other) == 1 for _, other in cycles if other != es)
        records.append(TriangleRecord(frozenset(vs), es, relevant))
    return records


def irrelevant_triangles(G: Multigraph) -> list[TriangleRecord]:
    return [t for t in classify_triangles(G) if not t.relevant]


def is_pruned(G: Multigraph) -> bool:
    """No irrelevant triangles."""
    return not irrelevant_triangles(G)
