"""Shared domain model: scheme tags, problem parameters, exact coverage laws."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Mapping


class Scheme(Enum):
    """How an agent fills its memory while roving.

    ABIDE agents record data from exactly m distinct, uniformly chosen
    nodes. EABIDE agents fill m memory cells with independent uniform node
    draws, so duplicates are possible and a full memory may cover anywhere
    from 1 to m distinct nodes.
    """

    ABIDE = "abide"
    EABIDE = "eabide"


@dataclass(frozen=True)
class Params:
    """Problem size: n nodes in the network, m memory slots per agent, k agents."""

    n: int
    m: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must satisfy n >= 1")
        if not 1 <= self.m <= self.n:
            raise ValueError("m must satisfy 1 <= m <= n")
        if self.k < 1:
            raise ValueError("k must satisfy k >= 1")

    def coverage_support(self, scheme: Scheme) -> range:
        """Coverage sizes t with nonzero probability under `scheme`.

        A single ABIDE agent already covers m nodes, so the ABIDE support
        starts at m; an EABIDE agent may cover as little as one node.
        Neither scheme can exceed min(k*m, n).
        """
        low = self.m if scheme is Scheme.ABIDE else 1
        return range(low, min(self.k * self.m, self.n) + 1)


@dataclass(frozen=True)
class CoverageDistribution:
    """Exact law of T = number of distinct nodes covered by all k agents.

    `mass` maps each t in the scheme's support to an exact probability;
    every t outside the support has probability exactly zero. Construction
    re-verifies that the masses are probabilities summing to exactly 1,
    which doubles as an end-to-end self-test of the counting formulas.
    """

    params: Params
    scheme: Scheme
    mass: Mapping[int, Fraction]

    def __post_init__(self) -> None:
        support = self.params.coverage_support(self.scheme)
        for t, p in self.mass.items():
            if t not in support:
                raise ValueError(f"mass at t={t} lies outside the support {support}")
            if not 0 <= p <= 1:
                raise ValueError(f"mass at t={t} is not a probability: {p}")
        total = sum(self.mass.values(), Fraction(0))
        if total != 1:
            raise ValueError(f"masses must sum to exactly 1, got {total}")

    def support(self) -> range:
        return self.params.coverage_support(self.scheme)

    def probability(self, t: int) -> Fraction:
        """P(T = t); exact zero outside the support."""
        return self.mass.get(t, Fraction(0))

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """(t, P(T = t)) pairs in increasing t."""
        return iter(sorted(self.mass.items()))

    def mean(self) -> Fraction:
        """E[T] as an exact rational (a size, so it may exceed 1)."""
        return sum((t * p for t, p in self.mass.items()), Fraction(0))

    def mode(self) -> int:
        """Most probable coverage size; smallest t wins ties."""
        return min(self.mass, key=lambda t: (-self.mass[t], t))

    def tail(self, t_min: int) -> Fraction:
        """P(T >= t_min), exact."""
        return sum((p for t, p in self.mass.items() if t >= t_min), Fraction(0))
