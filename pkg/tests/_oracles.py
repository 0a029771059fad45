"""Slow, independent reference implementations used only by the tests."""
from itertools import combinations

from cubicpm.graph_core import CubicMultigraph, IsoClasses, is_bridgeless


def labelled_cubic_multigraphs(n):
    """Every loopless cubic multigraph on vertices 0..n-1, by filling a symmetric matrix."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    deg = [0] * n
    mult = {}
    out = []

    def rec(k):
        if k == len(pairs):
            if all(d == 3 for d in deg):
                out.append([p for p in pairs for _ in range(mult.get(p, 0))])
            return
        i, j = pairs[k]
        for c in range(4):
            if deg[i] + c > 3 or deg[j] + c > 3:
                break
            if j == n - 1 and deg[i] + c != 3:
                continue
            mult[(i, j)] = c
            deg[i] += c
            deg[j] += c
            rec(k + 1)
            deg[i] -= c
            deg[j] -= c
        mult.pop((i, j), None)

    rec(0)
    return out


def bridgeless_classes_by_brute_force(n):
    classes = IsoClasses()
    for edges in labelled_cubic_multigraphs(n):
        G = CubicMultigraph(edges, n)
        if G.is_connected() and is_bridgeless(G):
            classes.add(G)
    return classes


def perfect_matchings_by_subsets(G):
    """All n/2-subsets of edges that cover each vertex once."""
    out = []
    for S in combinations(range(G.m), G.n // 2):
        seen = set()
        ok = True
        for e in S:
            u, v = G.edges[e]
            if u in seen or v in seen:
                ok = False
                break
            seen.update((u, v))
        if ok:
            out.append(frozenset(S))
    return out


def simple_cycles_edge_sets(G, X):
    """Edge sets of all cycles of G|X, parallel pairs included."""
    Xs = sorted(set(X))
    inner = sorted(G.inner_edges(Xs))
    found = set()

    def walk(start, v, used_e, used_v):
        for e in G.incident(v):
            if e not in inner_set or e in used_e:
                continue
            w = G.other(e, v)
            if w == start and len(used_e) >= 1:
                found.add(frozenset(used_e | {e}))
            elif w > start and w not in used_v:
                walk(start, w, used_e | {e}, used_v | {w})

    inner_set = set(inner)
    for s in Xs:
        walk(s, s, frozenset(), frozenset({s}))
    return [c for c in found if len(c) >= 2]


def alternating_packing_number(G, X, M):
    """Max number of vertex-disjoint M-alternating cycles in G|X, by exhaustive packing."""
    M = set(M)
    cycles = []
    for C in simple_cycles_edge_sets(G, X):
        if len(C) % 2:
            continue
        if 2 * len(C & M) != len(C):
            continue
        verts = frozenset(v for e in C for v in G.edges[e])
        # alternating: each vertex of the cycle meets exactly one M edge of it
        if all(sum(1 for e in C if e in M and v in G.edges[e]) == 1 for v in verts):
            cycles.append(verts)
    best = 0

    def rec(i, used, k):
        nonlocal best
        best = max(best, k)
        if k + len(cycles) - i <= best:
            return
        for j in range(i, len(cycles)):
            if not cycles[j] & used:
                rec(j + 1, used | cycles[j], k + 1)

    rec(0, frozenset(), 0)
    return best
