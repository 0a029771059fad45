"""The constructive foliage for graphs without a core.

Given a pruned G and a side Z of a 2- or 3-edge-cut whose contraction has no
core, build a foliage inside Z of weight at least alpha|Z| + beta2, by the
induction on |Z|: decompose the contraction along small cuts, pick the branch
vertex t*, then either cut off a long path, cut off everything beyond t*, or
collect the leaf twigs.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .bounds.constants import ALPHA, BETA2
from .burls import Burl, Foliage, burl_by_tree_branch, foliage_weight, is_twig
from .errors import InductionStuck, PreconditionFailed
from .graph_core.multigraph import Multigraph
from .graph_core.triangles import is_pruned
from .structure.contraction import contract_side, prune
from .structure.core import has_core
from .structure.decomposition import maximize_decomposition, refine_decomposition
from .structure.twigs import elementary_twigs

LONG_PATH = 32


@dataclass
class KleeResult:
    foliage: Foliage
    Z: frozenset
    trace: list = field(default_factory=list)

    @property
    def cases(self) -> set:
        return {step["case"] for step in self.trace}

    def bound_holds(self) -> bool:
        return foliage_weight(self.foliage) >= ALPHA * len(self.Z) + BETA2

    def to_json(self) -> dict:
        return {
            "Z_size": len(self.Z),
            "foliage": self.foliage.to_json(),
            "bound": str(ALPHA * len(self.Z) + BETA2),
            "bound_holds": self.bound_holds(),
            "trace": self.trace,
        }


def _side_ok(G: Multigraph, Z) -> bool:
    k = len(G.boundary(Z))
    return (k == 2 and len(Z) >= 2) or (k == 3 and len(Z) >= 4)


def klee_foliage(G: Multigraph, Z, check_core: bool = True) -> KleeResult:
    Z = frozenset(Z)
    if not Z or len(Z) >= G.n or not _side_ok(G, Z):
        raise PreconditionFailed("Z must be a side with |Z|>=2 and a 2-cut, or |Z|>=4 and a 3-cut")
    if not is_pruned(G):
        raise PreconditionFailed("G must be pruned")
    if check_core and has_core(contract_side(G, frozenset(G.vertices()) - Z).graph).has_core:
        raise PreconditionFailed("the contraction of delta(Z) keeping Z has a core")
    trace: list = []
    burls = _klee(G, Z, trace, 0)
    res = KleeResult(Foliage(burls), Z, trace)
    if not res.foliage.is_disjoint() or not res.foliage.vertices() <= Z:
        raise InductionStuck("constructed family is not a foliage inside Z", trace)
    if not res.bound_holds():
        raise InductionStuck(f"weight {foliage_weight(res.foliage)} below alpha|Z| + beta2", trace)
    return res


def _leaf_of(d, comp):
    leaves = [t for t in comp if d.degree(t) == 1]
    if len(leaves) != 1:
        return None
    return leaves[0]


def _path_order(d, comp, start):
    adj = d.adjacency()
    order, prev, cur = [start], None, start
    while True:
        nxt = [b for b, _ in adj[cur] if b in comp and b != prev]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


def _reduce(G, Z, W, trace, depth, note):
    """Contract W (a side inside Z) in G, prune at most one triangle, recurse on the image of Z."""
    step = contract_side(G, W)
    H = step.graph
    idx = step.vertex_index()
    Zp = {idx[v] for v in Z - W}
    if step.new_vertex is not None:
        Zp.add(step.new_vertex)
    pr = prune(H)
    if pr.contractions > 1:
        raise InductionStuck(f"{note}: {pr.contractions} triangles needed contracting", trace)
    # image of Zp in the pruned graph; a contracted triangle must lie on one side
    Zpp = set()
    for v, orig in enumerate(pr.origin):
        inside = orig & Zp
        if inside and inside != orig:
            raise InductionStuck(f"{note}: contracted triangle straddles Z'", trace)
        if inside:
            Zpp.add(v)
    Zpp = frozenset(Zpp)
    P = pr.graph
    if len(Zpp) <= 6 or len(Zpp) >= P.n or not _side_ok(P, Zpp):
        sub = []
    else:
        sub = _klee(P, Zpp, trace, depth + 1)
    out = []
    for b in sub:
        in_h = pr.expand(b.vertices)
        if step.new_vertex is not None and step.new_vertex in in_h:
            continue
        if step.new_edge is not None and set(H.edges[step.new_edge]) <= in_h:
            continue
        vs = frozenset(step.vertex_origin[v] for v in in_h)
        out.append(Burl(vs, is_twig(G, vs) or "other", b.certificate))
    return out, len(Zpp)


def _klee(G: Multigraph, Z: frozenset, trace: list, depth: int) -> list:
    if len(Z) <= 6:
        kind = is_twig(G, Z)
        if kind is None:
            raise InductionStuck(f"base set of size {len(Z)} is not a twig", trace)
        trace.append({"depth": depth, "Z": len(Z), "case": "base"})
        return [Burl(Z, kind, "twig")]
    outside = frozenset(G.vertices()) - Z
    Gp = contract_side(G, outside)
    H = Gp.graph
    to_g = Gp.vertex_origin
    Y = []
    for tw in elementary_twigs(H, require_pruned=False):
        y = tw.vertices
        if len(y) == H.n:
            # tiny G' that is one elementary twig: Z itself is a twig and
            # beta1 >= beta2 + 80 alpha covers |Z| <= 7
            kind = is_twig(G, Z)
            if kind is None:
                raise InductionStuck("G' is a single elementary twig but Z is not a twig", trace)
            trace.append({"depth": depth, "Z": len(Z), "case": "whole_twig"})
            return [Burl(Z, kind, "twig")]
        if len(y) >= 2 and len(H.boundary(y)) in (2, 3) and H.n - len(y) > 1:
            Y.append(y)
    d = maximize_decomposition(H, refine_decomposition(H, Y), Y)
    if Gp.new_vertex is not None:
        t0 = d.phi[Gp.new_vertex]
    else:
        t0 = d.phi[min(H.edges[Gp.new_edge])]
    big = [t for t in range(d.tree_n) if t != t0 and d.degree(t) >= 3]
    adj = d.adjacency()

    def comps_without(t):
        out = []
        seen = {t}
        for s, _ in adj[t]:
            comp = {s}
            stack = [s]
            while stack:
                a = stack.pop()
                for b, _ in adj[a]:
                    if b not in seen and b not in comp:
                        comp.add(b)
                        stack.append(b)
            seen |= comp
            out.append(comp)
        return out

    if big:
        def t0_side(t):
            return len(next(c for c in comps_without(t) if t0 in c))
        tstar = max(big, key=lambda t: (t0_side(t), -t))
    else:
        tstar = t0
    comps = comps_without(tstar)
    T0 = next((c for c in comps if t0 in c), None) if tstar != t0 else None
    branches = [c for c in comps if c is not T0]
    info = {"depth": depth, "Z": len(Z), "tree_n": d.tree_n, "t0": t0, "t_star": tstar,
            "branch_sizes": sorted(len(c) for c in branches)}

    leaf_twigs = []
    for c in branches:
        leaf = _leaf_of(d, c)
        if leaf is None or any(d.degree(t) > 2 for t in c):
            raise InductionStuck(f"branch at t*={tstar} is not a path ending in a leaf", trace + [info])
        X = frozenset(to_g[v] for v in d.preimage(leaf))
        kind = is_twig(G, X)
        if kind is None or None in X:
            raise InductionStuck(f"leaf {leaf} preimage is not a twig of G", trace + [info])
        leaf_twigs.append((c, leaf, Burl(X, kind, "leaf-twig")))

    long = [(c, leaf, tw) for c, leaf, tw in leaf_twigs if len(c) >= LONG_PATH + 1]
    if long:
        c, leaf, tw = long[0]
        order = _path_order(d, c, leaf)
        Tp = order[:LONG_PATH + 1]
        branch = burl_by_tree_branch(H, d, Tp[1:])
        bvs = frozenset(to_g[v] for v in branch.vertices)
        W = frozenset(to_g[v] for v in d.preimage_of(Tp))
        info["case"] = "long_path"
        trace.append(info)
        sub, zsize = _reduce(G, Z, W, trace, depth, "long path")
        info["Z_prime"] = zsize
        return sub + [tw, Burl(bvs, is_twig(G, bvs) or "other", branch.certificate)]

    if tstar != t0 and len(d.preimage_of(T0)) >= 7:
        W = frozenset(to_g[v] for v in d.preimage_of(set(range(d.tree_n)) - T0))
        info["case"] = "cut_at_t_star"
        trace.append(info)
        sub, zsize = _reduce(G, Z, W, trace, depth, "cut at t*")
        info["Z_prime"] = zsize
        return sub + [tw for _, _, tw in leaf_twigs]

    info["case"] = "leaf_twigs_small_t0_side" if tstar != t0 else "leaf_twigs_at_t0"
    trace.append(info)
    return [tw for _, _, tw in leaf_twigs]
