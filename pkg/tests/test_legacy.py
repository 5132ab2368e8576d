from fractions import Fraction
from threading import Event

import pytest

from agentcov.abide import coverage_probability
from agentcov.legacy import (
    EvaluationCancelledError,
    TermBudgetExceededError,
    legacy_probability,
)
from agentcov.model import Params


def test_rejects_small_agent_counts():
    for k in (1, 2, 3):
        with pytest.raises(ValueError, match="k >= 4"):
            legacy_probability(Params(6, 2, k), 3)


def test_matches_inclusion_exclusion_law():
    assert legacy_probability(Params(8, 1, 4), 4) == coverage_probability(Params(8, 1, 4), 4)
    assert legacy_probability(Params(6, 2, 4), 2) == coverage_probability(Params(6, 2, 4), 2)
    for n in range(1, 7):
        for m in range(1, min(n, 2) + 1):
            p = Params(n=n, m=m, k=4)
            for t in range(0, n + 2):
                assert legacy_probability(p, t) == coverage_probability(p, t), (p, t)


def test_above_support_is_zero():
    assert legacy_probability(Params(6, 2, 4), 9) == 0


def test_law_sums_to_one():
    for n in (4, 6, 8):
        for m in (1, 2):
            p = Params(n=n, m=m, k=4)
            total = sum(
                (legacy_probability(p, t) for t in range(0, n + 1)), Fraction(0)
            )
            assert total == 1, p


def test_also_agrees_for_five_agents():
    p = Params(5, 2, 5)
    for t in range(0, 6):
        assert legacy_probability(p, t) == coverage_probability(p, t)


def test_term_budget_is_enforced():
    with pytest.raises(TermBudgetExceededError):
        legacy_probability(Params(10, 3, 6), 8, term_budget=10)


def test_cancellation_is_cooperative():
    cancel = Event()
    cancel.set()
    with pytest.raises(EvaluationCancelledError):
        legacy_probability(Params(10, 3, 6), 8, cancel=cancel)


def test_unset_cancel_event_is_harmless():
    cancel = Event()
    p = Params(6, 1, 4)
    assert legacy_probability(p, 3, cancel=cancel) == coverage_probability(p, 3)
