"""One test per acceptance criterion; each records a PASS/FAIL line shown in the terminal summary."""
import time

import pytest

from _oracles import perfect_matchings_by_subsets
from conftest import ACCEPTANCE_LINES
from cubicpm.balanced import burl_certificate
from cubicpm.bounds.constants import constant_system, minimal_ceps
from cubicpm.bounds.splitting import four_split_identity
from cubicpm.graph_core import generate, k4_chain
from cubicpm.matching import matching_counts
from cubicpm.suites import run_suite


def record(num, title, ok, detail, seconds, budget):
    within = seconds <= budget
    status = "PASS" if ok and within else "FAIL"
    ACCEPTANCE_LINES.append(f"criterion {num}: {status} {title} ({detail}; {seconds:.1f}s of {budget}s)")
    print(ACCEPTANCE_LINES[-1])
    assert ok, detail
    assert within, f"took {seconds:.1f}s, budget {budget}s"


def _suite(num, title, name, budget, extra=None):
    t = time.perf_counter()
    res = run_suite(name)
    ok, detail = res.passed, f"{res.checked} checks"
    if res.failures:
        detail += f", first failure: {res.failures[0]}"
    if extra is not None and ok:
        ok, more = extra(res)
        detail += f", {more}"
    record(num, title, ok, detail, time.perf_counter() - t, budget)


def test_criterion_01_exact_counts():
    t = time.perf_counter()
    want_m = {"K4": 3, "B3": 3, "K33": 6, "petersen": 6, "prism": 4}
    want_star = {"petersen": 2, "K4": 1, "prism": 1}
    bad = []
    for name, m in want_m.items():
        G = generate(name)
        mc = matching_counts(G)
        oracle = perfect_matchings_by_subsets(G)
        if mc.m != m or len(oracle) != m:
            bad.append(f"m({name})={mc.m}, oracle {len(oracle)}")
        if name in want_star:
            per_edge = [sum(1 for M in oracle if e in M) for e in range(G.m)]
            if mc.m_star != want_star[name] or min(per_edge) != want_star[name]:
                bad.append(f"m*({name})={mc.m_star}")
    record(1, "exact perfect matching counts", not bad, "; ".join(bad) or "8 values match",
           time.perf_counter() - t, 1)


def test_criterion_02_smallcount():
    _suite(2, "small-count bounds on corpus", "smallcount", 60)


def test_criterion_03_balanced():
    _suite(3, "balanced distributions and the 3-cut claim", "balanced", 120)


def test_criterion_04_burls():
    def extra(res):
        w = res.details["k4_chain12_window"]
        return w["min_expected"] == "2/3", f"k4_chain(12) window min_expected {w['min_expected']}"

    _suite(4, "twig, 4-cut and chain burl certificates", "burls", 600, extra)


def test_criterion_05_contraction():
    _suite(5, "cut contraction and triangle contraction", "contraction", 300)


def test_criterion_06_decomposition():
    def extra(res):
        names = [k for k in res.details if k.startswith(("necklace", "k4_chain"))]
        return len(names) == 13, f"{len(names)} graphs"

    _suite(6, "maximal decomposition trichotomy", "decomposition", 300, extra)


def test_criterion_07_splitting():
    t = time.perf_counter()
    frozen = []
    for name in ("petersen", "K33"):
        G = generate(name)
        for e in range(G.m):
            rep = four_split_identity(G, e)
            frozen.append(rep.count_e == 2 and rep.S == 6)
    res = run_suite("splitting")
    ok = res.passed and all(frozen)
    record(7, "four-split identity 3*count_e = S", ok, f"{res.checked} edges, frozen S=6 on {len(frozen)}",
           time.perf_counter() - t, 30)


def test_criterion_08_constants():
    t = time.perf_counter()
    c = minimal_ceps()
    s = constant_system(c)
    ok = c == 3656 and s.all_hold and s.tight_set == {4, 6, 9, 10} and constant_system(c - 1).failing() == [2]
    record(8, "constant system", ok, f"c={c}, tight={sorted(s.tight_set)}", time.perf_counter() - t, 1)


def test_criterion_09_verdict():
    _suite(9, "two-way theorem verdict and explicit flips", "verdict", 300)


def test_criterion_10_klee():
    def extra(res):
        seen = set(res.details["cases_seen"])
        need = {"base", "long_path", "cut_at_t_star"}
        return need <= seen, f"cases {sorted(seen)}"

    _suite(10, "constructive foliage weight bound", "klee", 600, extra)


def test_criterion_11_kregular():
    _suite(11, "k-regular reduction", "kregular", 60)
