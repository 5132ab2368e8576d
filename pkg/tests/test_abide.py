from fractions import Fraction

import pytest

from agentcov.abide import (
    coverage_distribution,
    coverage_probability,
    mean_coverage,
    mean_coverage_closed_form,
    q_count,
)
from agentcov.combinatorics import factorial, stirling2
from agentcov.model import Params, Scheme
from oracles import enumerate_abide, enumerate_q_matrices

GRID = [
    Params(n=n, m=m, k=k)
    for n in range(1, 6)
    for m in range(1, min(n, 3) + 1)
    for k in range(1, 3)
]


# ---------------------------------------------------------------- q_count

def test_q_count_single_all_ones_row():
    assert q_count(1, 2, 2) == 1


def test_q_count_matches_matrix_enumeration():
    assert q_count(2, 2, 3) == enumerate_q_matrices(2, 2, 3) == 6
    for k in range(1, 4):
        for m in range(1, 4):
            for t in range(m, 3 * m + 1):
                assert q_count(k, m, t) == enumerate_q_matrices(k, m, t), (k, m, t)


def test_q_count_single_slot_is_surjection_count():
    assert q_count(2, 1, 2) == 2 == factorial(2) * stirling2(2, 2)


def test_q_count_below_m_is_zero():
    assert q_count(3, 2, 1) == 0
    assert q_count(3, 2, 0) == 0


# ---------------------------------------------------- coverage_probability

def test_single_agent_covers_exactly_m():
    assert coverage_probability(Params(4, 2, 1), 2) == 1


def test_probability_from_enumeration_example():
    # 36 ordered pairs of 2-subsets of a 4-set; 24 give a union of size 3.
    assert coverage_probability(Params(4, 2, 2), 3) == Fraction(2, 3)


def test_probability_below_support_is_zero():
    assert coverage_probability(Params(4, 2, 2), 1) == 0
    assert coverage_probability(Params(4, 2, 2), 5) == 0


def test_probability_never_exceeds_one():
    for p in GRID:
        for t in range(0, p.n + 2):
            assert 0 <= coverage_probability(p, t) <= 1


# --------------------------------------------------- coverage_distribution

def test_distribution_examples():
    assert dict(coverage_distribution(Params(2, 1, 2)).items()) == {
        1: Fraction(1, 2),
        2: Fraction(1, 2),
    }
    assert dict(coverage_distribution(Params(3, 3, 5)).items()) == {3: Fraction(1)}
    assert dict(coverage_distribution(Params(4, 2, 2)).items()) == {
        2: Fraction(1, 6),
        3: Fraction(2, 3),
        4: Fraction(1, 6),
    }


def test_distribution_matches_exhaustive_enumeration():
    for p in GRID:
        assert dict(coverage_distribution(p).items()) == enumerate_abide(p.n, p.m, p.k), p


def test_distribution_support_and_normalization():
    for p in GRID:
        dist = coverage_distribution(p)
        support = p.coverage_support(Scheme.ABIDE)
        assert set(dist.mass) == set(support)
        assert all(dist.probability(t) > 0 for t in support)
        assert sum(dist.mass.values()) == 1


def test_full_memory_is_point_mass():
    for n in range(1, 6):
        for k in range(1, 4):
            dist = coverage_distribution(Params(n=n, m=n, k=k))
            assert dict(dist.items()) == {n: Fraction(1)}


# ------------------------------------------------------------------- mean

def test_mean_single_agent_is_m():
    assert mean_coverage(Params(5, 2, 1)) == 2


def test_mean_examples():
    assert mean_coverage(Params(4, 2, 2)) == 3
    assert mean_coverage(Params(2, 1, 2)) == Fraction(3, 2)


def test_mean_matches_closed_form_on_grid():
    for p in GRID:
        assert mean_coverage(p) == mean_coverage_closed_form(p), p


def test_closed_form_value():
    p = Params(4, 2, 2)
    assert mean_coverage_closed_form(p) == 4 * (1 - Fraction(2, 4) ** 2) == 3
