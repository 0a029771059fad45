"""Cut-contractions on 2- and 3-edge-cuts, and pruning of irrelevant triangles."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import BadCutSize
from ..graph_core.cuts import EdgeCut, edge_cut
from ..graph_core.multigraph import CubicMultigraph, Multigraph
from ..graph_core.triangles import irrelevant_triangles


@dataclass
class Contracted:
    """One C-contraction with maps back to the parent graph.

    ``vertex_origin[i]`` is the parent vertex of vertex i, or None for the new
    vertex; ``edge_origin[j]`` likewise for edges (None for the new edge).
    """

    graph: CubicMultigraph
    vertex_origin: list
    edge_origin: list
    new_vertex: int | None = None
    new_edge: int | None = None

    def vertex_index(self) -> dict:
        return {o: i for i, o in enumerate(self.vertex_origin) if o is not None}

    def edge_index(self) -> dict:
        return {o: j for j, o in enumerate(self.edge_origin) if o is not None}


def contract_side(G: Multigraph, W) -> Contracted:
    """Contract the side W of the 2- or 3-edge-cut delta(W), keeping V - W."""
    W = frozenset(W)
    cut = G.boundary(W)
    if len(cut) not in (2, 3):
        raise BadCutSize(f"delta(W) has {len(cut)} edges; need 2 or 3")
    keep = [v for v in G.vertices() if v not in W]
    index = {v: i for i, v in enumerate(keep)}
    edges, eorig = [], []
    if len(cut) == 3:
        t = len(keep)
        for e, (u, v) in enumerate(G.edges):
            if u in W and v in W:
                continue
            a = t if u in W else index[u]
            b = t if v in W else index[v]
            edges.append((a, b))
            eorig.append(e)
        H = CubicMultigraph(edges, t + 1)
        return Contracted(H, keep + [None], eorig, new_vertex=t)
    ends = []
    for e, (u, v) in enumerate(G.edges):
        if u in W and v in W:
            continue
        if e in cut:
            ends.append(index[v] if u in W else index[u])
            continue
        edges.append((index[u], index[v]))
        eorig.append(e)
    edges.append(tuple(ends))
    eorig.append(None)
    H = CubicMultigraph(edges, len(keep))
    return Contracted(H, keep, eorig, new_edge=len(edges) - 1)


@dataclass
class CutContractionRecord:
    cut: EdgeCut
    pieces: tuple  # (keeps cut.side, keeps the other side)

    @property
    def new_elements(self) -> tuple:
        if self.cut.size == 3:
            return tuple(p.new_vertex for p in self.pieces)
        return tuple(p.new_edge for p in self.pieces)

    def to_json(self) -> dict:
        return {
            "cut": self.cut.to_json(),
            "pieces": [{"n": p.graph.n, "edges": [list(uv) for uv in p.graph.edges]} for p in self.pieces],
            "new_elements": list(self.new_elements),
        }


def cut_contract(G: Multigraph, C: EdgeCut | frozenset | list) -> CutContractionRecord:
    """Both C-contractions. ``C`` may be an EdgeCut or a vertex side."""
    if not isinstance(C, EdgeCut):
        C = edge_cut(G, C)
    if C.size not in (2, 3):
        raise BadCutSize(f"cut has {C.size} edges; need 2 or 3")
    keep_side = contract_side(G, C.other_side(G))
    keep_other = contract_side(G, C.side)
    return CutContractionRecord(C, (keep_side, keep_other))


@dataclass
class PruneResult:
    graph: CubicMultigraph
    log: list = field(default_factory=list)  # triangles contracted, in the labels of the graph at that step
    origin: list = field(default_factory=list)  # origin[v] = frozenset of original vertices merged into v

    @property
    def contractions(self) -> int:
        return len(self.log)

    def expand(self, X) -> frozenset:
        """Original vertices represented by the vertex set X of the pruned graph."""
        out = set()
        for v in X:
            out |= self.origin[v]
        return frozenset(out)


def contract_triangle(G: Multigraph, tri) -> Contracted:
    return contract_side(G, tri)


def prune(G: CubicMultigraph) -> PruneResult:
    """Contract irrelevant triangles until none remains."""
    origin = [frozenset({v}) for v in G.vertices()]
    log = []
    cur = G
    while True:
        bad = irrelevant_triangles(cur)
        if not bad:
            return PruneResult(cur, log, origin)
        tri = min(bad, key=lambda t: sorted(t.vertices))
        step = contract_side(cur, tri.vertices)
        merged = frozenset().union(*(origin[v] for v in tri.vertices))
        origin = [merged if o is None else origin[o] for o in step.vertex_origin]
        log.append(sorted(tri.vertices))
        cur = step.graph
