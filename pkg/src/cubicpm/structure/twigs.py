"""Simple and elementary twigs around relevant triangles."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotPruned
from ..graph_core.multigraph import Multigraph
from ..graph_core.triangles import classify_triangles, short_cycles


@dataclass(frozen=True)
class ElementaryTwig:
    vertices: frozenset
    kind: str  # "simple" or "double"
    triangles: tuple  # vertex sets of the relevant triangles inside

    def to_json(self) -> dict:
        return {"vertices": sorted(self.vertices), "kind": self.kind,
                "triangles": [sorted(t) for t in self.triangles]}


def simple_twigs(G: Multigraph, triangle) -> list[frozenset]:
    """V(T) union V(C) for every cycle C of length <= 4, C != T, sharing an edge with T."""
    tri_vs, tri_es = triangle
    out = set()
    for vs, es in short_cycles(G, 4, 2):
        if es != tri_es and es & tri_es:
            out.add(frozenset(tri_vs) | frozenset(vs))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def elementary_twigs(G: Multigraph, require_pruned: bool = True) -> list[ElementaryTwig]:
    """Disjoint elementary twigs covering every relevant triangle.

    Two relevant triangles interact when some simple twig of one meets some
    simple twig of the other. A triangle interacting with nothing contributes
    its smallest simple twig; an interacting pair contributes the smallest
    union of two intersecting simple twigs. Larger interaction classes do not
    occur in pruned graphs; if one shows up, the whole class is merged.
    """
    records = classify_triangles(G)
    if require_pruned and any(not t.relevant for t in records):
        raise NotPruned("graph contains an irrelevant triangle")
    tris = sorted((t for t in records if t.relevant), key=lambda t: sorted(t.vertices))
    options = [simple_twigs(G, (t.vertices, t.edges)) for t in tris]
    k = len(tris)
    parent = list(range(k))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(k):
        for j in range(i + 1, k):
            if any(A & B for A in options[i] for B in options[j]):
                parent[find(i)] = find(j)
    classes: dict[int, list[int]] = {}
    for i in range(k):
        classes.setdefault(find(i), []).append(i)
    out = []
    for members in classes.values():
        members.sort()
        tv = tuple(tris[i].vertices for i in members)
        if len(members) == 1:
            out.append(ElementaryTwig(options[members[0]][0], "simple", tv))
        elif len(members) == 2:
            i, j = members
            best = min((A | B for A in options[i] for B in options[j] if A & B), key=lambda s: (len(s), sorted(s)))
            out.append(ElementaryTwig(best, "double", tv))
        else:
            merged = frozenset().union(*(options[i][0] for i in members))
            out.append(ElementaryTwig(merged, "merged", tv))
    out.sort(key=lambda t: sorted(t.vertices))
    return out
