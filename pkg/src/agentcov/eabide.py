"""Exact coverage law for the EABIDE sampling scheme.

An EABIDE agent fills its m memory cells with independent uniform node
draws, so one agent covers between 1 and m distinct nodes. Because every
cell is an independent uniform draw, the k*m cells behave exactly like
k*m single-slot ABIDE agents; the whole law therefore reduces to the
m = 1 ABIDE case, and the admissible-configuration count becomes the
number of surjections from the mk cells onto the t covered nodes:
R(k, m, t) = Q(km, 1, t) = t!·S(mk, t).
"""

from __future__ import annotations

from fractions import Fraction

from .combinatorics import binomial, factorial, stirling2
from .model import CoverageDistribution, Params, Scheme

__all__ = [
    "r_count",
    "r_count_direct",
    "coverage_probability_star",
    "coverage_distribution_star",
    "reduce_to_abide",
    "mean_coverage_star",
    "mean_coverage_star_closed_form",
]

# Above this many memory cells the Stirling row (quadratic in mk to build)
# loses to the direct alternating sum, whose work grows with the support
# size instead; both routes compute the same surjection count.
_STIRLING_ROW_MAX_CELLS = 1000

# Per-call dual-route assertion cap, mirroring combinatorics._CROSS_CHECK_MAX_N.
_CROSS_CHECK_MAX_CELLS = 64


def r_count(k: int, m: int, t: int) -> int:
    """Number of ways the mk independent draws can hit exactly t named nodes.

    Equivalently the number of surjections from the mk memory cells onto
    the t nodes, t!·S(mk, t). The Stirling form is the canonical route (one
    cached Stirling row serves every t of a distribution); for very large
    mk the direct inclusion-exclusion sum is used instead, and debug builds
    assert the two routes agree for mk <= 64.

    Returns 0 when t < 1 or t > mk (too few draws to reach t distinct nodes).
    """
    if t < 1 or k < 1 or m < 1:
        return 0
    cells = m * k
    if t > cells:
        return 0
    if cells > _STIRLING_ROW_MAX_CELLS:
        return r_count_direct(k, m, t)
    value = factorial(t) * stirling2(cells, t)
    if __debug__ and cells <= _CROSS_CHECK_MAX_CELLS:
        assert value == r_count_direct(k, m, t), (k, m, t)
    return value


def r_count_direct(k: int, m: int, t: int) -> int:
    """The same surjection count via Σ_{i=0}^{t-1} (-1)^i C(t, i)(t-i)^{mk}.

    Independent of the Stirling route; the i = t term would be 0^{mk} = 0
    and is omitted.
    """
    if t < 1 or k < 1 or m < 1:
        return 0
    cells = m * k
    if t > cells:
        return 0
    total = 0
    for i in range(t):
        term = binomial(t, i) * (t - i) ** cells
        total += -term if i & 1 else term
    assert total >= 0, (k, m, t)
    return total


def coverage_probability_star(p: Params, t: int) -> Fraction:
    """P(T = t) = C(n, t)·R(k, m, t) / n^{mk} under EABIDE, exact.

    Exact zero outside the support [1, min(k*m, n)].
    """
    if t not in p.coverage_support(Scheme.EABIDE):
        return Fraction(0)
    return Fraction(binomial(p.n, t) * r_count(p.k, p.m, t), p.n ** (p.m * p.k))


def coverage_distribution_star(p: Params) -> CoverageDistribution:
    """The full exact law of T under EABIDE; masses sum to exactly 1."""
    denominator = p.n ** (p.m * p.k)
    mass = {
        t: Fraction(binomial(p.n, t) * r_count(p.k, p.m, t), denominator)
        for t in p.coverage_support(Scheme.EABIDE)
    }
    return CoverageDistribution(params=p, scheme=Scheme.EABIDE, mass=mass)


def reduce_to_abide(p: Params) -> Params:
    """ABIDE parameters whose law equals the EABIDE law of `p`.

    Every memory cell acts as its own one-slot agent, so (n, m, k) under
    EABIDE matches (n, 1, k*m) under ABIDE exactly; a fixed point when
    m == 1.
    """
    return Params(n=p.n, m=1, k=p.k * p.m)


def mean_coverage_star(p: Params) -> Fraction:
    """E[T] = Σ_t t·P(T = t) over the EABIDE support, exact."""
    return coverage_distribution_star(p).mean()


def mean_coverage_star_closed_form(p: Params) -> Fraction:
    """E[T] = n·(1 - (1 - 1/n)^{mk}), by per-node coverage under mk draws."""
    return p.n * (1 - Fraction(p.n - 1, p.n) ** (p.m * p.k))
