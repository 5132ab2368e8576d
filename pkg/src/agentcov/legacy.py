"""Original nested-sum form of the ABIDE coverage probability.

The earlier derivation of P(T = t) conditions on how much of the running
union each successive agent re-visits: with u nodes covered so far, the
next agent overlaps the union in j of its m picks in C(u, j)·C(n-u, m-j)
ways and grows the union to u + m - j. Summing the product chain over all
overlap tuples for agents 2..k-1, with the last agent's overlap forced so
the union lands exactly on t, and dividing by C(n, m)^{k-1} gives the
probability. The sum is (k-2) levels deep, is stated only for k >= 4, and
costs up to (m+1)^{k-2} branches, so it survives here purely as an
independent oracle for the inclusion-exclusion law (CLI `verify`).
"""

from __future__ import annotations

from fractions import Fraction
from threading import Event

from .combinatorics import binomial
from .model import Params

__all__ = [
    "legacy_probability",
    "DEFAULT_TERM_BUDGET",
    "TermBudgetExceededError",
    "EvaluationCancelledError",
]

DEFAULT_TERM_BUDGET = 5_000_000


class TermBudgetExceededError(RuntimeError):
    """The nested sum would visit more branches than the caller allowed."""


class EvaluationCancelledError(RuntimeError):
    """The caller's cancellation event was set mid-evaluation."""


def legacy_probability(
    p: Params,
    t: int,
    *,
    term_budget: int = DEFAULT_TERM_BUDGET,
    cancel: Event | None = None,
) -> Fraction:
    """P(T = t) under ABIDE via the nested overlap sum; defined for k >= 4 only.

    Binomials with out-of-range arguments evaluate to zero and prune the
    branch, which is what enforces the implicit constraints on the overlap
    indices; t outside the support yields an exact 0 the same way.

    `term_budget` caps the number of visited branches (the sum is
    exponential in k); `cancel` is polled between branches so a caller can
    abort a long evaluation cooperatively.

    Raises ValueError for k < 4, TermBudgetExceededError when over budget,
    EvaluationCancelledError when cancelled.
    """
    if p.k < 4:
        raise ValueError("the nested-sum form is defined only for k >= 4")
    if term_budget < 1:
        raise ValueError("term_budget must satisfy term_budget >= 1")
    n, m, k = p.n, p.m, p.k
    visited = 0
    total = 0

    def descend(agent: int, union: int, prod: int) -> None:
        nonlocal total, visited
        visited += 1
        if visited > term_budget:
            raise TermBudgetExceededError(
                f"nested sum exceeded the budget of {term_budget} branches"
            )
        if cancel is not None and cancel.is_set():
            raise EvaluationCancelledError("nested-sum evaluation cancelled")
        if agent == k:
            # Last agent: overlap is forced so that union + m - overlap == t.
            overlap = union + m - t
            total += prod * binomial(union, overlap) * binomial(n - union, m - overlap)
            return
        for overlap in range(m + 1):
            ways_revisit = binomial(union, overlap)
            if ways_revisit == 0:
                continue
            ways_fresh = binomial(n - union, m - overlap)
            if ways_fresh == 0:
                continue
            descend(agent + 1, union + m - overlap, prod * ways_revisit * ways_fresh)

    descend(2, m, 1)
    assert total >= 0, (p, t)
    return Fraction(total, binomial(n, m) ** (k - 1))
