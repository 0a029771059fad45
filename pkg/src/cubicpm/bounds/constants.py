"""Exact arithmetic on the constants a*x + b with x = log2(4/3).

Comparisons are decided symbolically when both coefficients match, otherwise
by a certified interval for x whose width is halved until the sign is clear.
Since x is irrational, a nonzero x-coefficient always gives a strict answer.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor


def _atanh_bounds(z: Fraction, terms: int) -> tuple[Fraction, Fraction]:
    """Enclosure of atanh(z) for 0 < z < 1 from the first ``terms`` series terms."""
    s = Fraction(0)
    p = z
    z2 = z * z
    for k in range(terms):
        s += p / (2 * k + 1)
        p *= z2
    # remaining terms are below p / (2*terms + 1) * (1 + z^2 + z^4 + ...)
    tail = p / ((2 * terms + 1) * (1 - z2))
    return s, s + tail


@lru_cache(maxsize=None)
def x_interval(terms: int = 16) -> tuple[Fraction, Fraction]:
    """Certified [lo, hi] containing log(4/3)/log(2)."""
    a_lo, a_hi = _atanh_bounds(Fraction(1, 7), terms)  # log(4/3) = 2 atanh(1/7)
    b_lo, b_hi = _atanh_bounds(Fraction(1, 3), terms)  # log 2 = 2 atanh(1/3)
    return a_lo / b_hi, a_hi / b_lo


def _decide_sign(a: Fraction, b: Fraction) -> int:
    if a == 0:
        return (b > 0) - (b < 0)
    terms = 8
    while True:
        lo, hi = x_interval(terms)
        v1, v2 = a * lo + b, a * hi + b
        if v1 > 0 and v2 > 0:
            return 1
        if v1 < 0 and v2 < 0:
            return -1
        terms *= 2


@dataclass(frozen=True)
class ConstantValue:
    """The real number a*x + b."""

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @staticmethod
    def lift(v) -> "ConstantValue":
        return v if isinstance(v, ConstantValue) else ConstantValue(0, Fraction(v))

    def __add__(self, o):
        o = ConstantValue.lift(o)
        return ConstantValue(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return ConstantValue(-self.a, -self.b)

    def __sub__(self, o):
        return self + (-ConstantValue.lift(o))

    def __rsub__(self, o):
        return ConstantValue.lift(o) - self

    def __mul__(self, k):
        if isinstance(k, ConstantValue):
            raise TypeError("products of two x-terms are not linear")
        k = Fraction(k)
        return ConstantValue(self.a * k, self.b * k)

    __rmul__ = __mul__

    def sign(self) -> int:
        return _decide_sign(self.a, self.b)

    def same_as(self, o) -> bool:
        """Symbolic identity (the only way equality is ever claimed)."""
        o = ConstantValue.lift(o)
        return self.a == o.a and self.b == o.b

    def __le__(self, o):
        d = ConstantValue.lift(o) - self
        return d.same_as(0) or d.sign() > 0

    def __lt__(self, o):
        d = ConstantValue.lift(o) - self
        return not d.same_as(0) and d.sign() > 0

    def __ge__(self, o):
        return ConstantValue.lift(o) <= self

    def __gt__(self, o):
        return ConstantValue.lift(o) < self

    def enclosure(self, terms: int = 16) -> tuple[Fraction, Fraction]:
        lo, hi = x_interval(terms)
        v = sorted((self.a * lo + self.b, self.a * hi + self.b))
        return v[0], v[1]

    def __str__(self):
        parts = []
        if self.a:
            scaled = self.a * 314
            if scaled.denominator == 1:
                parts.append(f"{scaled.numerator}x/314")
            else:
                parts.append(f"({self.a})x")
        if self.b or not parts:
            parts.append(str(self.b))
        return " + ".join(parts)

    def to_json(self) -> dict:
        lo, hi = self.enclosure()
        return {"symbolic": str(self), "x_coeff": str(self.a), "const": str(self.b),
                "enclosure": [f"{float(lo):.15g}", f"{float(hi):.15g}"]}


X = ConstantValue(1)
ALPHA = ConstantValue(Fraction(1, 314))
BETA1 = ConstantValue(Fraction(154, 314))
BETA2 = ConstantValue(Fraction(74, 314))
GAMMA = ConstantValue(Fraction(312, 314))
LOG2_6 = ConstantValue(-1, 3)  # log2 6 = 1 + log2 3 = 3 - x


def inequalities(c: int) -> list[tuple[int, ConstantValue, ConstantValue]]:
    """(id, lhs, rhs) for lhs <= rhs. Item 2 is multiplied through by the
    positive denominator: 1/c <= alpha/(9 beta1 + 3) iff 9 beta1 + 3 <= c alpha."""
    a, b1, b2, g = ALPHA, BETA1, BETA2, GAMMA
    return [
        (1, a, b2),  # together with 0 < alpha and beta2 <= beta1, checked below
        (2, 9 * b1 + 3, c * a),
        (3, b2 + 6 * a, b1),
        (4, 74 * a, b2),
        (5, 146 * a, b1),
        (6, b2 + 80 * a, b1),
        (7, 6 * a + g, LOG2_6),
        (8, g + 2 * b1 + 7 * a - b2, ConstantValue(0, 1)),
        (9, 6 * a + 2 * b1, X),
        (10, 2 * b1 + 4 * a, g),
    ]


@dataclass
class InequalityStatus:
    ident: int
    holds: bool
    tight: bool
    lhs: ConstantValue
    rhs: ConstantValue

    def to_json(self) -> dict:
        lo, hi = (self.rhs - self.lhs).enclosure()
        return {"id": self.ident, "holds": self.holds, "tight": self.tight, "lhs": str(self.lhs),
                "rhs": str(self.rhs), "slack": [f"{float(lo):.6g}", f"{float(hi):.6g}"]}


@dataclass
class ConstantSystem:
    c: int
    alpha: ConstantValue
    beta1: ConstantValue
    beta2: ConstantValue
    gamma: ConstantValue
    report: list

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.report)

    @property
    def tight_set(self) -> set:
        return {r.ident for r in self.report if r.tight}

    def failing(self) -> list:
        return [r.ident for r in self.report if not r.holds]

    def to_json(self) -> dict:
        return {
            "c": self.c,
            "alpha": str(self.alpha), "beta1": str(self.beta1), "beta2": str(self.beta2), "gamma": str(self.gamma),
            "inequalities": [r.to_json() for r in self.report],
            "all_hold": self.all_hold,
            "tight_set": sorted(self.tight_set),
        }


def constant_system(c: int) -> ConstantSystem:
    if c < 1:
        raise ValueError("c must be a positive integer")
    report = []
    for ident, lhs, rhs in inequalities(c):
        holds = lhs <= rhs
        if ident == 1:
            holds = holds and ALPHA > 0 and BETA2 <= BETA1
        report.append(InequalityStatus(ident, holds, lhs.same_as(rhs), lhs, rhs))
    return ConstantSystem(c, ALPHA, BETA1, BETA2, GAMMA, report)


def minimal_ceps() -> int:
    """Least integer c with (c - 1386) x >= 942, i.e. ceil(1386 + 942/x)."""
    terms = 8
    while True:
        lo, hi = x_interval(terms)
        # 942/x is decreasing in x
        top, bottom = 1386 + Fraction(942) / lo, 1386 + Fraction(942) / hi
        if floor(bottom) == floor(top) and bottom.denominator != 1:
            c = ceil(bottom)
            break
        terms *= 2
    assert constant_system(c).all_hold and 2 in constant_system(c - 1).failing()
    return c
