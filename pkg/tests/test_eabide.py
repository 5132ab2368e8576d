from fractions import Fraction
from itertools import product

import pytest

from agentcov.abide import coverage_distribution
from agentcov.eabide import (
    coverage_distribution_star,
    coverage_probability_star,
    mean_coverage_star,
    mean_coverage_star_closed_form,
    r_count,
    r_count_direct,
    reduce_to_abide,
)
from agentcov.model import Params, Scheme
from oracles import enumerate_eabide, stirling_by_recurrence

GRID = [
    Params(n=n, m=m, k=k)
    for n in range(1, 6)
    for m in range(1, min(n, 3) + 1)
    for k in range(1, 3)
]


# ---------------------------------------------------------------- r_count

def test_r_count_one_draw_one_node():
    assert r_count(1, 1, 1) == 1


def test_r_count_matches_sequence_enumeration():
    # Sequences of 2 draws over 2 named columns that hit both: 2 of 4.
    surjective = sum(1 for seq in product(range(2), repeat=2) if len(set(seq)) == 2)
    assert r_count(1, 2, 2) == surjective == 2
    for t in range(1, 5):
        for cells in range(1, 7):
            expected = sum(
                1 for seq in product(range(t), repeat=cells) if len(set(seq)) == t
            )
            assert r_count(1, cells, t) == expected, (cells, t)


def test_r_count_stirling_example():
    assert r_count(2, 2, 3) == 6 * stirling_by_recurrence(4, 3) == 36


def test_r_count_degenerate_cases():
    assert r_count(2, 3, 0) == 0
    assert r_count(2, 3, 7) == 0  # t > mk


def test_r_count_routes_agree():
    for cells in range(1, 31):
        for t in range(1, cells + 1):
            assert r_count(1, cells, t) == r_count_direct(1, cells, t), (cells, t)


def test_r_count_large_cells_uses_direct_route():
    # Above the Stirling-row cutoff both routes must still agree.
    k, m = 30, 40  # mk = 1200
    for t in range(1, 6):
        assert r_count(k, m, t) == r_count_direct(k, m, t)


# ---------------------------------------------------- star probability/law

def test_star_probability_two_node_examples():
    p = Params(2, 2, 1)
    assert coverage_probability_star(p, 1) == Fraction(1, 2)
    assert coverage_probability_star(p, 2) == Fraction(1, 2)


def test_star_probability_single_draw():
    assert coverage_probability_star(Params(5, 1, 1), 1) == 1


def test_star_probability_outside_support_is_zero():
    p = Params(4, 2, 2)
    assert coverage_probability_star(p, 0) == 0
    assert coverage_probability_star(p, 5) == 0


def test_star_distribution_examples():
    assert dict(coverage_distribution_star(Params(2, 2, 1)).items()) == {
        1: Fraction(1, 2),
        2: Fraction(1, 2),
    }
    assert dict(coverage_distribution_star(Params(1, 3, 2)).items()) == {1: Fraction(1)}
    assert dict(coverage_distribution_star(Params(3, 1, 2)).items()) == {
        1: Fraction(1, 3),
        2: Fraction(2, 3),
    }


def test_star_distribution_matches_exhaustive_enumeration():
    for p in GRID:
        assert (
            dict(coverage_distribution_star(p).items())
            == enumerate_eabide(p.n, p.m, p.k)
        ), p


def test_star_support_and_normalization():
    for p in GRID:
        dist = coverage_distribution_star(p)
        support = p.coverage_support(Scheme.EABIDE)
        assert set(dist.mass) == set(support)
        assert all(dist.probability(t) > 0 for t in support)
        assert sum(dist.mass.values()) == 1


# ------------------------------------------------------- scheme reduction

def test_reduce_to_abide_substitution():
    assert reduce_to_abide(Params(10, 4, 3)) == Params(10, 1, 12)
    assert reduce_to_abide(Params(2, 2, 1)) == Params(2, 1, 2)


def test_reduce_to_abide_fixed_point_when_m_is_one():
    assert reduce_to_abide(Params(5, 1, 7)) == Params(5, 1, 7)


def test_reduction_preserves_distribution():
    for n in range(1, 7):
        for m in range(1, min(n, 3) + 1):
            for k in range(1, 3):
                p = Params(n=n, m=m, k=k)
                star = dict(coverage_distribution_star(p).items())
                reduced = dict(coverage_distribution(reduce_to_abide(p)).items())
                assert star == reduced, p


# ------------------------------------------------------------------- mean

def test_mean_star_examples():
    assert mean_coverage_star(Params(1, 5, 2)) == 1
    assert mean_coverage_star(Params(2, 2, 1)) == Fraction(3, 2)
    assert mean_coverage_star(Params(3, 1, 2)) == Fraction(5, 3)


def test_mean_star_matches_closed_form_on_grid():
    for p in GRID:
        assert mean_coverage_star(p) == mean_coverage_star_closed_form(p), p


# ------------------------------------------------------------- dominance

def test_abide_stochastically_dominates_eabide():
    # Without-replacement sampling covers at least as much in distribution.
    for p in GRID:
        with_replacement = coverage_distribution_star(p)
        without_replacement = coverage_distribution(p)
        for threshold in range(0, p.n + 2):
            assert without_replacement.tail(threshold) >= with_replacement.tail(
                threshold
            ), (p, threshold)
