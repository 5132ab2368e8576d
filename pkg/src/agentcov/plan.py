"""Planner: smallest number of agents achieving a coverage goal.

Answers the deployment question "how many agents are needed so the fusion
point holds data from at least t_min distinct nodes with probability at
least c" by searching the exact tail probability, which is nondecreasing
in the agent count (an extra agent can only grow the union).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import abide, eabide
from .model import CoverageDistribution, Params, Scheme

__all__ = [
    "PlanQuery",
    "PlanOutcome",
    "DEFAULT_K_MAX",
    "exact_distribution",
    "closed_form_mean",
    "tail_probability",
    "markov_bound",
    "min_agents",
]

DEFAULT_K_MAX = 1_000_000


def exact_distribution(p: Params, scheme: Scheme) -> CoverageDistribution:
    """The scheme's exact coverage law."""
    if scheme is Scheme.ABIDE:
        return abide.coverage_distribution(p)
    return eabide.coverage_distribution_star(p)


def closed_form_mean(p: Params, scheme: Scheme) -> Fraction:
    """E[T] in closed form, without building the full law."""
    if scheme is Scheme.ABIDE:
        return abide.mean_coverage_closed_form(p)
    return eabide.mean_coverage_star_closed_form(p)


def tail_probability(p: Params, scheme: Scheme, t_min: int) -> Fraction:
    """P(T >= t_min), exact; 1 for t_min at or below the support, 0 above it."""
    return exact_distribution(p, scheme).tail(t_min)


def markov_bound(p: Params, scheme: Scheme, t_min: int) -> Fraction:
    """Markov upper bound min(1, E[T]/t_min) on the tail P(T >= t_min).

    Uses the closed-form mean, so it stays cheap at parameter sizes where
    the full distribution is expensive; it always dominates the exact tail.
    """
    if t_min < 1:
        raise ValueError("t_min must satisfy t_min >= 1")
    return min(Fraction(1), closed_form_mean(p, scheme) / t_min)


@dataclass(frozen=True)
class PlanQuery:
    """A coverage goal: reach >= t_min distinct nodes with the given confidence.

    `confidence` is an exact rational so the feasibility predicate, and
    therefore the returned agent count, is deterministic. t_min above n is
    accepted here and reported as infeasible by min_agents rather than
    rejected, so callers get a report instead of a crash.
    """

    n: int
    m: int
    t_min: int
    confidence: Fraction
    scheme: Scheme = Scheme.ABIDE
    k_max: int = DEFAULT_K_MAX

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must satisfy n >= 1")
        if not 1 <= self.m <= self.n:
            raise ValueError("m must satisfy 1 <= m <= n")
        if self.t_min < 1:
            raise ValueError("t_min must satisfy t_min >= 1")
        if not 0 < self.confidence < 1:
            raise ValueError("confidence must lie strictly between 0 and 1")
        if self.k_max < 1:
            raise ValueError("k_max must satisfy k_max >= 1")


@dataclass(frozen=True)
class PlanOutcome:
    """Result of a minimum-agent search.

    When feasible, `agents` is the smallest sufficient k and `tail` the
    exact tail probability it achieves. When infeasible, `agents` is None,
    `reason` says why, and `tail` reports what k_max achieves (zero when
    the goal can never be met).
    """

    query: PlanQuery
    feasible: bool
    agents: int | None
    tail: Fraction
    reason: str | None = None


def min_agents(q: PlanQuery) -> PlanOutcome:
    """Smallest k <= k_max with P(T >= t_min) >= confidence.

    Doubles k until the goal is met — valid because the tail is
    nondecreasing in k — then binary-searches the first sufficient k.
    Infeasibility is reported, never raised.
    """
    if q.t_min > q.n:
        return PlanOutcome(
            query=q,
            feasible=False,
            agents=None,
            tail=Fraction(0),
            reason=f"t_min={q.t_min} exceeds the network size n={q.n}",
        )

    cache: dict[int, Fraction] = {}

    def tail_at(k: int) -> Fraction:
        if k not in cache:
            cache[k] = tail_probability(Params(n=q.n, m=q.m, k=k), q.scheme, q.t_min)
        return cache[k]

    known_short = 0  # largest k known to miss the goal
    k = 1
    while True:
        k = min(k, q.k_max)
        if tail_at(k) >= q.confidence:
            first_enough = k
            break
        known_short = k
        if k == q.k_max:
            return PlanOutcome(
                query=q,
                feasible=False,
                agents=None,
                tail=tail_at(k),
                reason=f"no agent count up to k_max={q.k_max} reaches confidence {q.confidence}",
            )
        k *= 2

    lo, hi = known_short, first_enough
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if tail_at(mid) >= q.confidence:
            hi = mid
        else:
            lo = mid
    return PlanOutcome(query=q, feasible=True, agents=hi, tail=tail_at(hi))
