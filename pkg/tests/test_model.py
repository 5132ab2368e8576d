from fractions import Fraction

import pytest

from agentcov.model import CoverageDistribution, Params, Scheme


@pytest.mark.parametrize(
    "n,m,k,message",
    [
        (0, 1, 1, "n must satisfy"),
        (2, 0, 1, "m must satisfy"),
        (2, 3, 1, "m must satisfy"),
        (2, 1, 0, "k must satisfy"),
    ],
)
def test_params_validation(n, m, k, message):
    with pytest.raises(ValueError, match=message):
        Params(n=n, m=m, k=k)


def test_coverage_support_per_scheme():
    p = Params(n=10, m=3, k=2)
    assert p.coverage_support(Scheme.ABIDE) == range(3, 7)
    assert p.coverage_support(Scheme.EABIDE) == range(1, 7)
    # min(km, n) caps the top end
    assert Params(n=4, m=3, k=2).coverage_support(Scheme.ABIDE) == range(3, 5)


def _half_half() -> CoverageDistribution:
    return CoverageDistribution(
        params=Params(n=2, m=1, k=2),
        scheme=Scheme.ABIDE,
        mass={1: Fraction(1, 2), 2: Fraction(1, 2)},
    )


def test_distribution_rejects_bad_sum():
    with pytest.raises(ValueError, match="sum to exactly 1"):
        CoverageDistribution(
            params=Params(n=2, m=1, k=2),
            scheme=Scheme.ABIDE,
            mass={1: Fraction(1, 2), 2: Fraction(1, 3)},
        )


def test_distribution_rejects_mass_outside_support():
    with pytest.raises(ValueError, match="outside the support"):
        CoverageDistribution(
            params=Params(n=2, m=1, k=2),
            scheme=Scheme.ABIDE,
            mass={1: Fraction(1, 2), 3: Fraction(1, 2)},
        )


def test_distribution_rejects_non_probability_mass():
    with pytest.raises(ValueError, match="not a probability"):
        CoverageDistribution(
            params=Params(n=2, m=1, k=2),
            scheme=Scheme.ABIDE,
            mass={1: Fraction(3, 2), 2: Fraction(-1, 2)},
        )


def test_distribution_accessors():
    dist = _half_half()
    assert dist.probability(1) == Fraction(1, 2)
    assert dist.probability(7) == 0
    assert dist.mean() == Fraction(3, 2)
    assert dist.mode() == 1  # tie broken toward the smaller t
    assert dist.tail(2) == Fraction(1, 2)
    assert dist.tail(0) == 1
    assert dist.tail(99) == 0
    assert list(dist.items()) == [(1, Fraction(1, 2)), (2, Fraction(1, 2))]
