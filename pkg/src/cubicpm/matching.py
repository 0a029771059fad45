"""Exact enumeration of perfect matchings and boundary matchings.

Matchings are ``frozenset`` objects of edge ids. Lists are returned in
canonical order: lexicographic on the sorted edge-id tuple.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import NotPerfect, SizeLimit
from .graph_core.multigraph import Multigraph

DEFAULT_MAX_VERTICES = 40
DEFAULT_MAX_FAMILY = 10**7


def _canonical(ms) -> list[frozenset]:
    return sorted(ms, key=lambda M: tuple(sorted(M)))


def enumerate_boundary_matchings(G: Multigraph, X, cap: int = DEFAULT_MAX_FAMILY) -> list[frozenset]:
    """M(G, X): subsets of E_X covering every vertex of X exactly once.

    Edges of delta(X) may share their endpoint outside X.
    """
    Xs = sorted(set(X))
    if not Xs:
        raise ValueError("X must be nonempty")
    inX = [False] * G.n
    for v in Xs:
        inX[v] = True
    covered = [False] * G.n
    chosen: list[int] = []
    out: list[frozenset] = []

    def rec(pos):
        while pos < len(Xs) and covered[Xs[pos]]:
            pos += 1
        if pos == len(Xs):
            out.append(frozenset(chosen))
            if len(out) > cap:
                raise SizeLimit(f"|M(G,X)| exceeds cap {cap}", cap=cap)
            return
        v = Xs[pos]
        covered[v] = True
        for e in G.incident(v):
            w = G.other(e, v)
            if inX[w]:
                if covered[w]:
                    continue
                covered[w] = True
                chosen.append(e)
                rec(pos + 1)
                chosen.pop()
                covered[w] = False
            else:
                chosen.append(e)
                rec(pos + 1)
                chosen.pop()
        covered[v] = False

    rec(0)
    return _canonical(out)


def enumerate_perfect_matchings(G: Multigraph, max_vertices: int = DEFAULT_MAX_VERTICES,
                                cap: int = DEFAULT_MAX_FAMILY) -> list[frozenset]:
    if G.n > max_vertices:
        raise SizeLimit(f"perfect-matching enumeration capped at n={max_vertices}", cap=max_vertices)
    if G.n == 0:
        return [frozenset()]
    return enumerate_boundary_matchings(G, range(G.n), cap=cap)


def count_perfect_matchings(G: Multigraph, max_vertices: int = 60) -> int:
    """Count without materialising the list (memoised on the covered set)."""
    if G.n > max_vertices:
        raise SizeLimit(f"perfect-matching counting capped at n={max_vertices}", cap=max_vertices)
    memo: dict[int, int] = {}
    full = (1 << G.n) - 1
    nbrs = [[G.other(e, v) for e in G.incident(v)] for v in G.vertices()]

    def rec(mask):
        if mask == full:
            return 1
        got = memo.get(mask)
        if got is not None:
            return got
        v = (~mask & (mask + 1)).bit_length() - 1
        total = 0
        for w in nbrs[v]:
            if not mask >> w & 1 and w != v:
                total += rec(mask | 1 << v | 1 << w)
        memo[mask] = total
        return total

    return rec(0)


@dataclass
class MatchingCounts:
    m: int
    per_edge: dict
    m_star: int

    def to_json(self) -> dict:
        return {"m": self.m, "m_star": self.m_star, "per_edge": {str(e): c for e, c in sorted(self.per_edge.items())}}


def matching_counts(G: Multigraph, matchings=None, **kw) -> MatchingCounts:
    ms = enumerate_perfect_matchings(G, **kw) if matchings is None else matchings
    per_edge = {e: 0 for e in range(G.m)}
    for M in ms:
        for e in M:
            per_edge[e] += 1
    m_star = min(per_edge.values()) if per_edge else 0
    return MatchingCounts(len(ms), per_edge, m_star)


def is_perfect_matching(G: Multigraph, M) -> bool:
    seen = set()
    for e in M:
        for v in G.edges[e]:
            if v in seen:
                return False
            seen.add(v)
    return len(seen) == G.n


def boundary_trace(G: Multigraph, X, M) -> frozenset:
    """M intersected with delta(X)."""
    return frozenset(M) & G.boundary(X)


def _component_count(G: Multigraph, edge_ids) -> int:
    parent = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in edge_ids:
        u, v = G.edges[e]
        parent.setdefault(u, u)
        parent.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return sum(1 for a in parent if find(a) == a)


def symdiff_components(G: Multigraph, M, M2) -> int:
    """Number of components of M xor M2; each is an alternating even cycle."""
    if not is_perfect_matching(G, M) or not is_perfect_matching(G, M2):
        raise NotPerfect("both arguments must be perfect matchings")
    return _component_count(G, set(M) ^ set(M2))


def alternating_components(G: Multigraph, M, M2) -> list[frozenset]:
    """Edge sets of the components of M xor M2."""
    D = set(M) ^ set(M2)
    out = []
    while D:
        e = D.pop()
        comp = {e}
        frontier = list(G.edges[e])
        seen_v = set(frontier)
        while frontier:
            v = frontier.pop()
            for f in G.incident(v):
                if f in D:
                    D.discard(f)
                    comp.add(f)
                    w = G.other(f, v)
                    if w not in seen_v:
                        seen_v.add(w)
                        frontier.append(w)
        out.append(frozenset(comp))
    return sorted(out, key=lambda c: sorted(c))


def alternating_numbers(G: Multigraph, X, family=None) -> dict:
    """a(G, X, M) for every M in M(G, X).

    a(G,X,M) is the maximum number of disjoint M-alternating cycles inside G|X.
    Flipping such cycles keeps the boundary trace, so the maximum ranges over
    the M' in M(G,X) sharing M's trace; the components of M xor M' are then
    exactly alternating cycles of G|X.
    """
    fam = enumerate_boundary_matchings(G, X) if family is None else family
    delta = G.boundary(X)
    groups: dict[frozenset, list[frozenset]] = {}
    for M in fam:
        groups.setdefault(M & delta, []).append(M)
    best = {M: 0 for M in fam}
    for members in groups.values():
        for A, B in combinations(members, 2):
            c = _component_count(G, A ^ B)
            if c > best[A]:
                best[A] = c
            if c > best[B]:
                best[B] = c
    return best


def alternating_number(G: Multigraph, X, M, family=None) -> int:
    fam = enumerate_boundary_matchings(G, X) if family is None else family
    M = frozenset(M)
    if M not in set(fam):
        raise ValueError("M is not an element of M(G, X)")
    delta = G.boundary(X)
    trace = M & delta
    return max((_component_count(G, M ^ N) for N in fam if N & delta == trace), default=0)


@dataclass
class SwitchWitness:
    count: int
    pair: tuple

    def to_json(self) -> dict:
        return {"count": self.count, "pair": [sorted(self.pair[0]), sorted(self.pair[1])]}


def max_switch_components(G: Multigraph, matchings=None, pair_cap: int = 5 * 10**6) -> SwitchWitness:
    ms = enumerate_perfect_matchings(G) if matchings is None else list(matchings)
    if not ms:
        raise ValueError("graph has no perfect matching")
    if len(ms) * (len(ms) - 1) // 2 > pair_cap:
        raise SizeLimit(f"{len(ms)} matchings exceed the pair cap {pair_cap}", cap=pair_cap)
    best = SwitchWitness(0, (ms[0], ms[0]))
    ceiling = G.n // 2
    for i, A in enumerate(ms):
        for B in ms[i + 1:]:
            c = _component_count(G, A ^ B)
            if c > best.count:
                best = SwitchWitness(c, (A, B))
                if c >= ceiling:
                    return best
    return best


def flip_matchings(G: Multigraph, M, M2) -> list[frozenset]:
    """The 2^k perfect matchings obtained from M by flipping any subset of the k cycles of M xor M2."""
    cycles = alternating_components(G, M, M2)
    out = []
    for mask in range(1 << len(cycles)):
        cur = set(M)
        for i, C in enumerate(cycles):
            if mask >> i & 1:
                cur ^= C
        out.append(frozenset(cur))
    return out
