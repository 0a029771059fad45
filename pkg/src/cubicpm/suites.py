"""Invariant suites run over the corpus; shared by ``verify-lemmas`` and the acceptance tests."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .balanced import ONE_THIRD, balanced_distribution, burl_certificate, check_balanced_claim
from .bounds.constants import ALPHA, BETA2, constant_system, minimal_ceps
from .bounds.kregular import kregular_construct
from .bounds.splitting import four_split_identity
from .bounds.verdict import main2_verdict
from .burls import burl_by_4cut, foliage_weight, is_twig
from .corpus import corpus
from .graph_core.cuts import (
    brute_force_cuts,
    connectivity_report,
    is_bridgeless,
    is_cyclically_4_edge_connected,
    small_cuts,
)
from .graph_core.generators import chain_tail_replace, circulant, complete_bipartite, generate, k4_chain, necklace, necklace_block, prism
from .graph_core.multigraph import Multigraph
from .graph_core.triangles import classify_triangles
from .klee import klee_foliage
from .matching import count_perfect_matchings, matching_counts
from .structure.contraction import contract_side, cut_contract
from .structure.decomposition import hub, maximize_decomposition, refine_decomposition, trichotomy
from .structure.twigs import elementary_twigs


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg):
        self.failures.append(msg)

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checked": self.checked,
                "failures": self.failures[:20], "details": self.details}


def _minus_edge(G: Multigraph, e: int) -> Multigraph:
    return Multigraph([uv for i, uv in enumerate(G.edges) if i != e], G.n)


def suite_counts(res: SuiteResult):
    want = {"K4": (3, 1), "B3": (3, 1), "K33": (6, 2), "petersen": (6, 2), "prism": (4, 1)}
    for name, (m, ms) in want.items():
        mc = matching_counts(generate(name))
        res.checked += 1
        res.details[name] = {"m": mc.m, "m_star": mc.m_star}
        if mc.m != m or mc.m_star != ms:
            res.fail(f"{name}: m={mc.m}, m*={mc.m_star}")


def suite_smallcount(res: SuiteResult):
    for entry in corpus():
        G = entry.graph
        m = count_perfect_matchings(G)
        res.checked += 1
        if G.n >= 6 and m < 4:
            res.fail(f"{entry.name}: m = {m} < 4")
        if 4 * m < G.n + 8:
            res.fail(f"{entry.name}: m = {m} < n/4 + 2")
        for e in range(G.m):
            if count_perfect_matchings(_minus_edge(G, e)) < 2:
                res.fail(f"{entry.name}: m(G - e{e}) < 2")


def suite_balanced(res: SuiteResult):
    for entry in corpus():
        G = entry.graph
        d = balanced_distribution(G)
        res.checked += 1
        if d.total() != 1 or any(d.marginal(e) != ONE_THIRD for e in range(G.m)):
            res.fail(f"{entry.name}: marginals not exactly 1/3")
        for c in small_cuts(G, 3):
            if c.size == 3 and not check_balanced_claim(d, c):
                res.fail(f"{entry.name}: claim fails on cut {sorted(c.cut_edges)}")


def suite_burls(res: SuiteResult, max_side: int = 12):
    kinds = {"twig2": 0, "twig3": 0, "4cut": 0}
    for entry in corpus():
        G = entry.graph
        sides = set()
        for c in small_cuts(G, 3):
            sides.add(c.side)
            sides.add(frozenset(G.vertices()) - c.side)
        for X in sorted(sides, key=sorted):
            kind = is_twig(G, X)
            if kind is None or len(X) > max_side:
                continue
            cert = burl_certificate(G, X)
            res.checked += 1
            kinds[kind] += 1
            need = 2 * ONE_THIRD if kind == "twig2" else ONE_THIRD
            if cert.min_expected < need:
                res.fail(f"{entry.name}: {kind} {sorted(X)} has min_expected {cert.min_expected}")
        if G.n <= 10:
            for c in brute_force_cuts(G, 4):
                if c.size != 4:
                    continue
                for X in (c.side, frozenset(G.vertices()) - c.side):
                    b = burl_by_4cut(G, X)
                    if b is None:
                        continue
                    res.checked += 1
                    kinds["4cut"] += 1
                    if not burl_certificate(G, X).is_burl:
                        res.fail(f"{entry.name}: 4-cut burl {sorted(X)} fails the LP")
    G = k4_chain(length=12)
    window = frozenset(range(3, 23))
    cert = burl_certificate(G, window)
    res.checked += 1
    res.details["k4_chain12_window"] = {"min_expected": str(cert.min_expected), "family": cert.family_size}
    if not cert.is_burl:
        res.fail("k4_chain(12) middle window is not a burl")
    res.details["instances"] = kinds


def suite_contraction(res: SuiteResult):
    for entry in corpus():
        G = entry.graph
        if G.n > 14:
            continue
        base = matching_counts(G).m_star
        for c in small_cuts(G, 3):
            if c.size < 2 or len(c.side) < 2 or len(c.side) > G.n - 2:
                continue
            rec = cut_contract(G, c)
            g1, g2 = (p.graph for p in rec.pieces)
            res.checked += 1
            for g in (g1, g2):
                if any(g.degree(v) != 3 for v in g.vertices()) or not is_bridgeless(g):
                    res.fail(f"{entry.name}: piece of cut {sorted(c.cut_edges)} not cubic bridgeless")
            if base < matching_counts(g1).m_star * matching_counts(g2).m_star:
                res.fail(f"{entry.name}: m* inequality fails on cut {sorted(c.cut_edges)}")
        for t in classify_triangles(G):
            if len(t.vertices) == G.n:
                continue
            res.checked += 1
            if matching_counts(contract_side(G, t.vertices).graph).m_star > base:
                res.fail(f"{entry.name}: contracting triangle {sorted(t.vertices)} raised m*")


def suite_decomposition(res: SuiteResult):
    graphs = [(f"necklace({k})", necklace(k)) for k in range(3, 7)]
    graphs += [(f"k4_chain({L})", k4_chain(length=L)) for L in range(4, 13)]
    for name, G in graphs:
        Y = [y.vertices for y in elementary_twigs(G)]
        d = maximize_decomposition(G, refine_decomposition(G, Y), Y)
        d.validate(G)
        labels = trichotomy(G, d, Y)
        res.checked += 1
        for t, lab in enumerate(labels):
            if lab == "c4ec_hub" and not connectivity_report(hub(G, d, t).graph).cyclically_4_edge_connected:
                res.fail(f"{name}: hub at {t} is not cyclically 4-edge-connected")
            if lab == "violation":
                res.fail(f"{name}: tree vertex {t} violates the trichotomy")
        res.details[name] = {"tree_n": d.tree_n, "labels": labels}


def suite_splitting(res: SuiteResult):
    graphs = [("petersen", generate("petersen")), ("K33", generate("K33"))]
    graphs += [(e.name, e.graph) for e in corpus() if e.graph.n >= 6 and is_cyclically_4_edge_connected(e.graph)]
    seen = set()
    for name, G in graphs:
        if name in seen:
            continue
        seen.add(name)
        for e in range(G.m):
            rep = four_split_identity(G, e)
            res.checked += 1
            if not rep.identity_holds:
                res.fail(f"{name}: edge {e}: 3*{rep.count_e} != {rep.S}")
        res.details[name] = {"edges": G.m}


def suite_prop_double(res: SuiteResult):
    for entry in corpus():
        G = entry.graph
        if G.n < 6 or not is_cyclically_4_edge_connected(G):
            continue
        res.checked += 1
        if matching_counts(G).m_star < 2:
            res.fail(f"{entry.name}: an edge lies in fewer than 2 perfect matchings")


def suite_constants(res: SuiteResult):
    c = minimal_ceps()
    s = constant_system(c)
    res.checked += 3
    res.details = {"c": c, "tight": sorted(s.tight_set), "c_minus_1_fails": constant_system(c - 1).failing()}
    if c != 3656:
        res.fail(f"minimal c = {c}")
    if not s.all_hold or s.tight_set != {4, 6, 9, 10}:
        res.fail(f"system at c: failing {s.failing()}, tight {sorted(s.tight_set)}")
    if 2 not in constant_system(c - 1).failing():
        res.fail("c - 1 still satisfies the c-dependent inequality (id 2)")


def suite_verdict(res: SuiteResult):
    for entry in corpus():
        G = entry.graph
        if G.n > 24:
            continue
        v = main2_verdict(G)
        res.checked += 1
        if not v.holds:
            res.fail(f"{entry.name}: neither S1 nor S2")
        if v.flipped != 2 ** v.components or v.flipped > v.m:
            res.fail(f"{entry.name}: flipping gave {v.flipped} matchings for {v.components} cycles")


def klee_instances() -> list:
    """(name, G, Z) pairs: necklace tails and chain tails."""
    out = []
    for k in (3, 5, 8, 20):
        G = necklace(k)
        out.append((f"necklace({k})/all-but-one", G, frozenset(range(4, 4 * k))))
        out.append((f"necklace({k})/one-block", G, necklace_block(0)))
    for k in (4, 6):
        G = necklace(2 * k)
        out.append((f"necklace({2 * k})/half", G, frozenset(range(4 * k))))
    for L in (4, 8, 12, 20, 40):
        G = k4_chain(length=L)
        if L >= 8:
            out.append((f"k4_chain({L})/tail", G, frozenset(range(7, G.n))))
        out.append((f"k4_chain({L})/all-but-end", G, frozenset(range(1, G.n))))
    for L in (2, 3, 6):
        G = prism()
        for v in (0, 1, 3, 4):
            G = chain_tail_replace(G, v, L)
        out.append((f"prism+tails({L})/all-but-one", G, frozenset(G.vertices()) - {5}))
    return out


def suite_klee(res: SuiteResult):
    cases = set()
    for name, G, Z in klee_instances():
        r = klee_foliage(G, Z)
        F = r.foliage
        res.checked += 1
        cases |= r.cases
        if not F.is_disjoint() or not F.vertices() <= Z:
            res.fail(f"{name}: not a foliage inside Z")
        if not foliage_weight(F) >= ALPHA * len(Z) + BETA2:
            res.fail(f"{name}: weight below alpha|Z| + beta2")
        for b in F.burls:
            if b.kind != "other" and is_twig(G, b.vertices) != b.kind:
                res.fail(f"{name}: burl {sorted(b.vertices)} is not the twig it claims")
            elif b.kind == "other" and not b.certificate.startswith(("tree_branch", "4cut", "2cuts", "k4chain")):
                res.fail(f"{name}: burl {sorted(b.vertices)} has no certificate")
        res.details[name] = {"Z": len(Z), "burls": len(F), "weight": str(foliage_weight(F)),
                             "cases": sorted(r.cases)}
    res.details["cases_seen"] = sorted(cases)


def suite_kregular(res: SuiteResult):
    for name, G in (("K44", complete_bipartite(4, 4)), ("C8(1,2)", circulant(8, [1, 2]))):
        r = kregular_construct(G, 4)
        res.checked += 1
        res.details[name] = {"reduced_n": r.reduced.n, "target": str(r.target), "m": r.m}
        if not r.chain_ok or r.reduced.n < r.target:
            res.fail(f"{name}: bound chain inconsistent")


SUITES = {
    "counts": suite_counts,
    "smallcount": suite_smallcount,
    "balanced": suite_balanced,
    "burls": suite_burls,
    "contraction": suite_contraction,
    "decomposition": suite_decomposition,
    "splitting": suite_splitting,
    "prop_double": suite_prop_double,
    "constants": suite_constants,
    "verdict": suite_verdict,
    "klee": suite_klee,
    "kregular": suite_kregular,
}


def run_suite(name: str) -> SuiteResult:
    res = SuiteResult(name)
    t = time.perf_counter()
    SUITES[name](res)
    res.seconds = time.perf_counter() - t
    return res
