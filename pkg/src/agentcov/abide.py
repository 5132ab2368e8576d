"""Exact coverage law for the ABIDE sampling scheme.

Each of k agents independently records a uniformly random m-subset of the
n nodes, and T is the size of the union of those subsets. Laying the
subsets out as a k x n binary visit matrix, T = t exactly when t columns
are nonzero, so P(T = t) reduces to counting k x t matrices with m ones
per row and no all-zero column; that count Q(k, m, t) follows from
inclusion-exclusion over the columns forced to stay empty.
"""

from __future__ import annotations

from fractions import Fraction

from .combinatorics import binomial
from .model import CoverageDistribution, Params, Scheme

__all__ = [
    "q_count",
    "coverage_probability",
    "coverage_distribution",
    "mean_coverage",
    "mean_coverage_closed_form",
]


def q_count(k: int, m: int, t: int) -> int:
    """Number of k x t binary matrices with exactly m ones per row and no zero column.

    Q(k, m, t) = Σ_{i=0}^{t-m} (-1)^i C(t, i) C(t-i, m)^k, evaluated in
    exact signed integers. Returns 0 when t < m (a row cannot place m ones
    in fewer than m columns) or when any argument is degenerate.
    """
    if k < 1 or m < 1 or t < m:
        return 0
    total = 0
    for i in range(t - m + 1):
        term = binomial(t, i) * binomial(t - i, m) ** k
        total += -term if i & 1 else term
    assert total >= 0, (k, m, t)
    return total


def coverage_probability(p: Params, t: int) -> Fraction:
    """P(T = t) = C(n, t)·Q(k, m, t) / C(n, m)^k, exact.

    Exact zero for t outside the support [m, min(k*m, n)]; callers may
    iterate arbitrary t ranges without special-casing.
    """
    if t not in p.coverage_support(Scheme.ABIDE):
        return Fraction(0)
    return Fraction(binomial(p.n, t) * q_count(p.k, p.m, t), binomial(p.n, p.m) ** p.k)


def coverage_distribution(p: Params) -> CoverageDistribution:
    """The full exact law of T under ABIDE.

    The denominator C(n, m)^k is computed once and shared across all t;
    the constructor re-verifies that the masses sum to exactly 1.
    """
    denominator = binomial(p.n, p.m) ** p.k
    mass = {
        t: Fraction(binomial(p.n, t) * q_count(p.k, p.m, t), denominator)
        for t in p.coverage_support(Scheme.ABIDE)
    }
    return CoverageDistribution(params=p, scheme=Scheme.ABIDE, mass=mass)


def mean_coverage(p: Params) -> Fraction:
    """E[T] = Σ_t t·P(T = t) over the support, exact."""
    return coverage_distribution(p).mean()


def mean_coverage_closed_form(p: Params) -> Fraction:
    """E[T] = n·(1 - ((n-m)/n)^k), without building the distribution.

    One agent misses a fixed node with probability C(n-1, m)/C(n, m) =
    (n-m)/n, so by linearity of expectation over nodes the mean coverage
    has this closed form. Kept separate from mean_coverage as an
    independent route for the consistency checks, and used by the
    planner's Markov bound where the full law would be wasteful.
    """
    return p.n * (1 - Fraction(p.n - p.m, p.n) ** p.k)
