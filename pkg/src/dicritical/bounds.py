"""Arc-count bounds for dicritical oriented graphs, in exact rational arithmetic.

Rationals are :class:`fractions.Fraction`; every comparison is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .digraph import Digraph
from .errors import KTooSmall

Rational = Fraction


def ceil_fraction(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def lower_bound_o3(n: int) -> Fraction:
    """Every 3-dicritical oriented graph on ``n`` vertices has at least (7n+2)/3 arcs."""
    if n < 1:
        raise ValueError("n must be positive")
    return Fraction(7 * n + 2, 3)


def lower_bound_ok(k: int, n: int) -> Fraction:
    """(k - 3/4 - 1/(4k-6)) n + 3/(4(2k-3)), valid for k >= 3."""
    if k < 3:
        raise KTooSmall(f"the general lower bound is stated for k >= 3, got k={k}")
    slope = k - Fraction(3, 4) - Fraction(1, 4 * k - 6)
    return slope * n + Fraction(3, 4 * (2 * k - 3))


def upper_ratio(k: int) -> int:
    return 2 * k - 3


def o3_upper(n: int) -> int:
    """Arc count of the O3 witness of order ``n``: ceil(5n/2)."""
    return (5 * n + 1) // 2


@dataclass(frozen=True)
class FamilySizes:
    i: int
    k: int
    n: int
    m: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.m, self.n)


@lru_cache(maxsize=None)
def _sizes(i: int, k: int) -> tuple[int, int]:
    if k == 2:
        return i + 2, i + 2
    n1, m1 = _sizes(1, k - 1)
    ni, mi = _sizes(i, k - 1)
    glued = math.comb(k, 2) - 1
    n = glued * n1 + ni + k
    m = glued * (2 * n1 + m1 + 1) + (2 * ni + mi + 1)
    return n, m


def family_sizes(i: int, k: int) -> FamilySizes:
    """Vertex and arc counts of the k-dicritical family member ``G^i_k``."""
    if i < 1 or k < 2:
        raise ValueError("family sizes need i >= 1 and k >= 2")
    n, m = _sizes(i, k)
    return FamilySizes(i, k, n, m)


@dataclass
class BoundComparison:
    name: str
    value: int
    bound: Fraction
    relation: str  # ">=", "<" or "<="
    holds: bool
    applicable: bool = True
    note: str = ""


@dataclass
class BoundsReport:
    n: int
    m: int
    k: int
    oriented: bool
    comparisons: list[BoundComparison] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return all(c.holds for c in self.comparisons if c.applicable)


def audit_bounds(D: Digraph, k: int) -> BoundsReport:
    """Compare ``m(D)`` against every bound relevant to a k-dicritical digraph.

    The lower bounds are only asserted for oriented inputs.  The (2k-3)n
    comparison is informational: the family constructions stay below it, but it
    is not a bound that every dicritical digraph satisfies.
    """
    n, m = D.n, D.m
    oriented = D.is_oriented()
    rep = BoundsReport(n=n, m=m, k=k, oriented=oriented)
    upper = Fraction(upper_ratio(k) * n)
    rep.comparisons.append(
        BoundComparison("upper_2k_minus_3", m, upper, "<", m < upper, applicable=False,
                        note="informational")
    )
    if k >= 3 and n >= 1:
        lb = lower_bound_ok(k, n)
        rep.comparisons.append(
            BoundComparison("lower_ok", m, lb, ">=", m >= lb, applicable=oriented,
                            note="" if oriented else "not oriented")
        )
    if k == 3 and n >= 1:
        lb3 = lower_bound_o3(n)
        rep.comparisons.append(
            BoundComparison("lower_o3", m, lb3, ">=", 3 * m >= 7 * n + 2, applicable=oriented,
                            note="" if oriented else "not oriented")
        )
    return rep
