"""Burls: twig recognition, structural burl certificates, foliages and their weight."""
from __future__ import annotations

from dataclasses import dataclass, field

from .bounds.constants import BETA1, BETA2, ConstantValue
from .errors import HypothesisFailed, NotAPath, NotFourCut
from .graph_core.generators import b3, k4
from .graph_core.iso import is_isomorphic
from .graph_core.multigraph import Multigraph
from .matching import count_perfect_matchings
from .structure.decomposition import SmallCutDecomposition, hub

TWIG_KINDS = ("twig2", "twig3")


def is_twig(G: Multigraph, X) -> str | None:
    X = frozenset(X)
    k = len(G.boundary(X))
    if k == 2:
        return "twig2"
    if k == 3 and len(X) >= 5:
        return "twig3"
    return None


@dataclass(frozen=True)
class Burl:
    vertices: frozenset
    kind: str  # twig2 | twig3 | other
    certificate: str

    @property
    def is_twig(self) -> bool:
        return self.kind in TWIG_KINDS

    @property
    def weight(self) -> ConstantValue:
        return BETA1 if self.is_twig else BETA2

    def relabel(self, mapping, G=None) -> "Burl":
        vs = frozenset(mapping[v] for v in self.vertices)
        kind = self.kind
        if G is not None:
            kind = is_twig(G, vs) or "other"
        return Burl(vs, kind, self.certificate)

    def to_json(self) -> dict:
        return {"vertices": sorted(self.vertices), "kind": self.kind, "certificate": self.certificate,
                "weight": str(self.weight)}


def twig_burl(G: Multigraph, X, certificate="twig") -> Burl:
    kind = is_twig(G, X)
    if kind is None:
        raise HypothesisFailed("set is not a twig", clause="twig")
    return Burl(frozenset(X), kind, certificate)


@dataclass
class Foliage:
    burls: list = field(default_factory=list)

    def is_disjoint(self) -> bool:
        seen = set()
        for b in self.burls:
            if seen & b.vertices:
                return False
            seen |= b.vertices
        return True

    @property
    def twigs(self) -> int:
        return sum(1 for b in self.burls if b.is_twig)

    def __len__(self):
        return len(self.burls)

    def vertices(self) -> frozenset:
        return frozenset().union(*(b.vertices for b in self.burls)) if self.burls else frozenset()

    def to_json(self) -> dict:
        return {"burls": [b.to_json() for b in self.burls], "weight": str(foliage_weight(self)),
                "twigs": self.twigs, "others": len(self) - self.twigs}


def foliage_weight(F: Foliage) -> ConstantValue:
    k = F.twigs
    return k * BETA1 + (len(F) - k) * BETA2


def burl_by_4cut(G: Multigraph, X) -> Burl | None:
    X = frozenset(X)
    if len(G.boundary(X)) != 4:
        raise NotFourCut(f"|delta(X)| = {len(G.boundary(X))}")
    H, _, _ = G.induced(X)
    if count_perfect_matchings(H) >= 2:
        return Burl(X, "other", "4cut")
    return None


def _check_path(d: SmallCutDecomposition, P) -> list:
    """Tree edges incident to P in path order; raises NotAPath."""
    P = list(P)
    if len(set(P)) != len(P) or not P:
        raise NotAPath("P must be a nonempty sequence of distinct tree vertices", clause="path")
    edge_of = {}
    for f, (a, b) in enumerate(d.tree_edges):
        edge_of[frozenset((a, b))] = f
    inner = []
    for a, b in zip(P, P[1:]):
        f = edge_of.get(frozenset((a, b)))
        if f is None:
            raise NotAPath(f"tree vertices {a} and {b} are not adjacent", clause="path")
        inner.append(f)
    for t in P:
        if d.degree(t) != 2:
            raise HypothesisFailed(f"tree vertex {t} has degree {d.degree(t)}, not 2", clause="degree")
    inner_set = set(inner)

    def outer(t):
        return [f for f, e in enumerate(d.tree_edges) if t in e and f not in inner_set]

    if len(P) == 1:
        ends = outer(P[0])
        return [ends[0], ends[1]]
    return [outer(P[0])[0]] + inner + [outer(P[-1])[0]]


def _cut_sizes(G, d, edges) -> list:
    return [d.cut_of_edge(G, f).size for f in edges]


def burl_by_k4_chain(G: Multigraph, d: SmallCutDecomposition, P) -> Burl:
    P = list(P)
    if len(P) != 10:
        raise HypothesisFailed(f"path has {len(P)} vertices, need 10", clause="length")
    incident = _check_path(d, P)
    for t in P:
        if not d.preimage(t) or not is_isomorphic(hub(G, d, t).graph, k4()):
            raise HypothesisFailed(f"hub at tree vertex {t} is not K4", clause="hub")
    if any(s != 3 for s in _cut_sizes(G, d, incident)):
        raise HypothesisFailed("an incident tree edge has a 2-edge-cut", clause="cut_size")
    X = d.preimage_of(P)
    return Burl(X, is_twig(G, X) or "other", "k4chain")


def burl_by_2cuts(G: Multigraph, d: SmallCutDecomposition, P) -> Burl:
    P = list(P)
    incident = _check_path(d, P)
    twos = sum(1 for s in _cut_sizes(G, d, incident) if s == 2)
    if twos < 3:
        raise HypothesisFailed(f"only {twos} incident tree edges carry 2-edge-cuts", clause="two_cuts")
    X = d.preimage_of(P)
    return Burl(X, is_twig(G, X) or "other", "2cuts")


def burl_by_tree_branch(G: Multigraph, d: SmallCutDecomposition, P) -> Burl:
    P = list(P)
    if len(P) != 32:
        raise HypothesisFailed(f"path has {len(P)} vertices, need 32", clause="length")
    incident = _check_path(d, P)
    for t in P:
        if not d.preimage(t):
            raise HypothesisFailed(f"tree vertex {t} has empty preimage", clause="hub")
        H = hub(G, d, t).graph
        if not (is_isomorphic(H, k4()) or is_isomorphic(H, b3())):
            raise HypothesisFailed(f"hub at tree vertex {t} is neither K4 nor B3", clause="hub")
    sizes = _cut_sizes(G, d, incident)
    X = d.preimage_of(P)
    if sum(1 for s in sizes if s == 2) >= 3:
        burl_by_2cuts(G, d, P)
        return Burl(X, is_twig(G, X) or "other", "tree_branch/2cuts")
    # at most two 2-cuts among 33 edges leave 11 consecutive 3-cuts
    for i in range(len(sizes) - 10):
        if all(s == 3 for s in sizes[i:i + 11]):
            burl_by_k4_chain(G, d, P[i:i + 10])
            return Burl(X, is_twig(G, X) or "other", f"tree_branch/k4chain@{i}")
    raise HypothesisFailed("no window of 11 consecutive 3-edge-cuts", clause="window")
