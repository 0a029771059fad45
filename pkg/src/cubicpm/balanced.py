"""Balanced distributions on M(G, X) and the burl certificate LP."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import Infeasible, NotThreeCut
from .graph_core.cuts import EdgeCut
from .graph_core.multigraph import Multigraph
from .lp import LpProblem, lp_solve_exact
from .matching import alternating_numbers, enumerate_boundary_matchings

ONE_THIRD = Fraction(1, 3)


def fmt_fraction(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass
class BalancedDistribution:
    support: list  # (frozenset, Fraction) with positive weights
    target_prob: Fraction
    X: frozenset

    def marginal(self, e: int) -> Fraction:
        return sum((w for M, w in self.support if e in M), Fraction(0))

    def total(self) -> Fraction:
        return sum((w for _, w in self.support), Fraction(0))

    def is_exact(self, G: Multigraph) -> bool:
        if self.total() != 1 or any(w <= 0 for _, w in self.support):
            return False
        return all(self.marginal(e) == self.target_prob for e in G.touching_edges(self.X))

    def to_json(self) -> dict:
        return {
            "target": fmt_fraction(self.target_prob),
            "support": [{"matching": sorted(M), "weight": fmt_fraction(w)} for M, w in self.support],
        }


def _balanced_rows(G: Multigraph, X, family, target) -> LpProblem:
    p = LpProblem(len(family))
    p.add_row({j: 1 for j in range(len(family))}, "=", 1)
    for e in sorted(G.touching_edges(X)):
        p.add_row({j: 1 for j, M in enumerate(family) if e in M}, "=", target)
    return p


def _support(family, x) -> list:
    return [(family[j], w) for j, w in enumerate(x) if w > 0]


def balanced_distribution(G: Multigraph, X=None, target=ONE_THIRD, family=None) -> BalancedDistribution:
    Xs = frozenset(G.vertices() if X is None else X)
    target = Fraction(target)
    fam = enumerate_boundary_matchings(G, Xs) if family is None else family
    sol = lp_solve_exact(_balanced_rows(G, Xs, fam, target))
    if not sol.optimal:
        raise Infeasible(f"no distribution on M(G,X) with every E_X edge at probability {target}")
    return BalancedDistribution(_support(fam, sol.x), target, Xs)


@dataclass
class BurlCertificate:
    min_expected: Fraction
    is_burl: bool
    witness: BalancedDistribution
    family_size: int

    def to_json(self) -> dict:
        return {
            "min_expected": fmt_fraction(self.min_expected),
            "is_burl": self.is_burl,
            "family_size": self.family_size,
            "witness": self.witness.to_json(),
        }


def burl_certificate(G: Multigraph, X) -> BurlCertificate:
    """Minimum of E[a(G,X,M)] over balanced distributions on M(G,X).

    Only E_X and M(G,X) enter the LP.
    """
    Xs = frozenset(X)
    fam = enumerate_boundary_matchings(G, Xs)
    a = alternating_numbers(G, Xs, fam)
    p = _balanced_rows(G, Xs, fam, ONE_THIRD)
    p.objective = {j: a[M] for j, M in enumerate(fam) if a[M]}
    sol = lp_solve_exact(p)
    if not sol.optimal:
        raise Infeasible("no balanced distribution on M(G,X)")
    d = BalancedDistribution(_support(fam, sol.x), ONE_THIRD, Xs)
    return BurlCertificate(sol.value, sol.value >= ONE_THIRD, d, len(fam))


def check_balanced_claim(d: BalancedDistribution, C: EdgeCut) -> bool:
    """Every support element meets the 3-edge-cut C in exactly one edge."""
    if C.size != 3:
        raise NotThreeCut(f"cut has {C.size} edges")
    return all(len(M & C.cut_edges) == 1 for M, w in d.support if w > 0)
