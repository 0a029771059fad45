"""Exact rational linear programming by the revised simplex method.

All arithmetic is in :class:`fractions.Fraction`. Pivoting follows Bland's
rule, so the method terminates on degenerate problems. Columns are kept
sparse; the basis inverse is an explicit dense m x m matrix, which is cheap
because the row counts here are small (one row per edge of E_X plus one).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CapExceeded

DEFAULT_NONZERO_CAP = 10**6


def as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        raise TypeError("floats are not accepted; pass ints, Fractions or 'p/q' strings")
    return Fraction(v)


@dataclass
class LpProblem:
    """minimise / maximise c.x subject to rows ``(coeffs, sense, rhs)`` and x >= 0.

    ``coeffs`` maps variable index to coefficient. ``sense`` is one of
    "<=", ">=", "=". ``objective`` may be None for a pure feasibility problem.
    """

    num_vars: int
    rows: list = field(default_factory=list)
    objective: dict | None = None
    sense: str = "min"

    def add_row(self, coeffs: dict, sense: str, rhs) -> None:
        if sense not in ("<=", ">=", "="):
            raise ValueError(f"bad row sense {sense!r}")
        self.rows.append(({j: as_fraction(a) for j, a in coeffs.items() if a != 0}, sense, as_fraction(rhs)))

    def nonzeros(self) -> int:
        return sum(len(r[0]) for r in self.rows)


@dataclass
class LpSolution:
    status: str  # "optimal", "infeasible", "unbounded"
    x: list | None = None
    value: Fraction | None = None
    basis: list | None = None
    iterations: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


class _Revised:
    def __init__(self, cols, b, m):
        self.cols = cols  # list of {row: Fraction}
        self.m = m
        self.binv = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
        self.xb = list(b)
        self.basis: list[int] = []
        self.iterations = 0

    def ftran(self, j):
        col = self.cols[j]
        out = [Fraction(0)] * self.m
        for i in range(self.m):
            row = self.binv[i]
            s = Fraction(0)
            for r, a in col.items():
                if row[r]:
                    s += row[r] * a
            out[i] = s
        return out

    def duals(self, cost):
        y = [Fraction(0)] * self.m
        for i, bj in enumerate(self.basis):
            cb = cost[bj]
            if cb:
                row = self.binv[i]
                for r in range(self.m):
                    if row[r]:
                        y[r] += cb * row[r]
        return y

    def pivot(self, r, j, d):
        piv = d[r]
        rowr = [v / piv for v in self.binv[r]]
        self.binv[r] = rowr
        xr = self.xb[r] / piv
        self.xb[r] = xr
        for i in range(self.m):
            if i != r and d[i]:
                f = d[i]
                row = self.binv[i]
                self.binv[i] = [row[k] - f * rowr[k] if rowr[k] else row[k] for k in range(self.m)]
                self.xb[i] -= f * xr
        self.basis[r] = j
        self.iterations += 1

    def run(self, cost, allowed):
        """Bland's rule on the columns in ``allowed`` (sorted indices)."""
        while True:
            y = self.duals(cost)
            inbasis = set(self.basis)
            enter = None
            for j in allowed:
                if j in inbasis:
                    continue
                rc = cost[j] - sum(y[r] * a for r, a in self.cols[j].items())
                if rc < 0:
                    enter = j
                    break
            if enter is None:
                return "optimal"
            d = self.ftran(enter)
            best = None
            for i in range(self.m):
                if d[i] > 0:
                    ratio = self.xb[i] / d[i]
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], enter, d)


def lp_solve_exact(p: LpProblem, nonzero_cap: int = DEFAULT_NONZERO_CAP) -> LpSolution:
    if p.nonzeros() > nonzero_cap:
        raise CapExceeded(f"LP has {p.nonzeros()} nonzeros, cap {nonzero_cap}", cap=nonzero_cap)
    n = p.num_vars
    m = len(p.rows)
    cols: list[dict] = [dict() for _ in range(n)]
    b = []
    for i, (coeffs, sense, rhs) in enumerate(p.rows):
        sign = -1 if rhs < 0 else 1
        for j, a in coeffs.items():
            cols[j][i] = sign * a
        if sense != "=":
            slack = {i: Fraction(sign * (1 if sense == "<=" else -1))}
            cols.append(slack)
        b.append(sign * rhs)
    n_struct = len(cols)
    for i in range(m):
        cols.append({i: Fraction(1)})
    art = range(n_struct, n_struct + m)

    solver = _Revised(cols, b, m)
    solver.basis = list(art)
    cost1 = [Fraction(0)] * n_struct + [Fraction(1)] * m
    solver.run(cost1, range(n_struct))
    if sum(solver.xb[i] for i in range(m) if solver.basis[i] >= n_struct) > 0:
        return LpSolution("infeasible", iterations=solver.iterations)

    # drive zero-level artificials out of the basis where a real column can replace them
    for r in range(m):
        if solver.basis[r] < n_struct:
            continue
        inbasis = set(solver.basis)
        for j in range(n_struct):
            if j in inbasis:
                continue
            d = solver.ftran(j)
            if d[r] != 0:
                solver.pivot(r, j, d)
                break

    obj = p.objective or {}
    flip = -1 if p.sense == "max" else 1
    cost2 = [Fraction(0)] * len(cols)
    for j, a in obj.items():
        cost2[j] = flip * as_fraction(a)
    status = solver.run(cost2, range(n_struct))
    if status == "unbounded":
        return LpSolution("unbounded", iterations=solver.iterations)
    full = [Fraction(0)] * len(cols)
    for i, j in enumerate(solver.basis):
        full[j] = solver.xb[i]
    x = full[:n]
    value = sum((as_fraction(a) * x[j] for j, a in obj.items()), Fraction(0))
    return LpSolution("optimal", x=x, value=value, basis=[j for j in solver.basis if j < n],
                      iterations=solver.iterations)


def check_solution(p: LpProblem, x) -> bool:
    """Exact feasibility check of a candidate point."""
    if any(v < 0 for v in x):
        return False
    for coeffs, sense, rhs in p.rows:
        lhs = sum((a * x[j] for j, a in coeffs.items()), Fraction(0))
        if sense == "=" and lhs != rhs or sense == "<=" and lhs > rhs or sense == ">=" and lhs < rhs:
            return False
    return True
