"""Monte Carlo sampler for both coverage schemes.

Every trial draws its own RNG from (seed, trial index) through a
splitmix64 mix, so a simulation result is a pure function of
(params, scheme, trials, seed) — never of how trials were scheduled
across workers. Empirical probabilities are exposed as exact rationals
counts/trials so comparisons against the exact laws stay exact.
"""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .model import CoverageDistribution, Params, Scheme

__all__ = [
    "VisitMatrix",
    "SimulationResult",
    "trial_rng",
    "sample_trial",
    "union_size",
    "run_simulation",
    "total_variation",
]

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15  # splitmix64 sequence increment


def _splitmix64(x: int) -> int:
    x &= _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def trial_rng(seed: int, index: int) -> random.Random:
    """Independent RNG for one trial, a pure function of (seed, index)."""
    return random.Random(_splitmix64((seed + (index + 1) * _GOLDEN) & _MASK64))


@dataclass(frozen=True)
class VisitMatrix:
    """Which agent covered which node: row i holds agent i's covered columns.

    Under ABIDE every row has exactly m entries; under EABIDE between 1
    and m. Columns with no entry in any row are the unvisited nodes.
    """

    cols: int
    rows: tuple[frozenset[int], ...]

    @classmethod
    def from_bits(cls, bits: Sequence[Sequence[int]]) -> "VisitMatrix":
        """Build from a dense 0/1 matrix (rows of equal length)."""
        if not bits:
            return cls(cols=0, rows=())
        width = len(bits[0])
        if any(len(row) != width for row in bits):
            raise ValueError("bit rows must all have the same length")
        return cls(
            cols=width,
            rows=tuple(frozenset(j for j, bit in enumerate(row) if bit) for row in bits),
        )

    def to_bits(self) -> list[list[int]]:
        return [[1 if j in row else 0 for j in range(self.cols)] for row in self.rows]

    @property
    def agents(self) -> int:
        return len(self.rows)

    def row_sizes(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    def union_size(self) -> int:
        """Number of columns visited by at least one agent."""
        return len(frozenset().union(*self.rows)) if self.rows else 0


def union_size(matrix: VisitMatrix) -> int:
    """Coverage size of a trial: columns with at least one visit."""
    return matrix.union_size()


def sample_trial(p: Params, scheme: Scheme, rng: random.Random) -> VisitMatrix:
    """One trial: each agent's covered set, drawn per the scheme.

    ABIDE rows are uniform m-subsets of the n columns; EABIDE rows are the
    occupancy of m independent uniform draws (1..m distinct columns).
    Intermediate hops are not modelled — only nodes where data is taken
    count as visited.
    """
    if scheme is Scheme.ABIDE:
        rows = tuple(frozenset(rng.sample(range(p.n), p.m)) for _ in range(p.k))
    else:
        rows = tuple(
            frozenset(rng.randrange(p.n) for _ in range(p.m)) for _ in range(p.k)
        )
    return VisitMatrix(cols=p.n, rows=rows)


@dataclass(frozen=True)
class SimulationResult:
    """Tallied coverage sizes over `trials` independent trials."""

    params: Params
    scheme: Scheme
    trials: int
    counts: Mapping[int, int]
    seed: int

    def empirical_probability(self, t: int) -> Fraction:
        """counts(t)/trials as an exact rational."""
        return Fraction(self.counts.get(t, 0), self.trials)

    def empirical_distribution(self) -> dict[int, Fraction]:
        return {t: Fraction(c, self.trials) for t, c in sorted(self.counts.items())}


def run_simulation(
    p: Params,
    scheme: Scheme,
    trials: int,
    seed: int,
    workers: int = 1,
) -> SimulationResult:
    """Run `trials` independent trials and tally coverage sizes.

    `workers` is a partitioning hint only (thread pool over contiguous
    index chunks); because each trial's RNG derives from its global index,
    the result is bit-identical for every worker count.
    """
    if trials < 1:
        raise ValueError("trials must satisfy trials >= 1")
    if workers < 1:
        raise ValueError("workers must satisfy workers >= 1")

    def tally(indices: range) -> Counter[int]:
        local: Counter[int] = Counter()
        for i in indices:
            local[sample_trial(p, scheme, trial_rng(seed, i)).union_size()] += 1
        return local

    if workers == 1:
        counts = tally(range(trials))
    else:
        chunk = -(-trials // workers)
        spans = [range(s, min(s + chunk, trials)) for s in range(0, trials, chunk)]
        counts = Counter()
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for partial in pool.map(tally, spans):
                counts.update(partial)
    return SimulationResult(
        params=p,
        scheme=scheme,
        trials=trials,
        counts=dict(sorted(counts.items())),
        seed=seed,
    )


def total_variation(dist: CoverageDistribution, sim: SimulationResult) -> Fraction:
    """Total variation distance ½·Σ_t |exact(t) - empirical(t)|, exact.

    Raises ValueError when the two sides describe different experiments.
    """
    if dist.params != sim.params or dist.scheme is not sim.scheme:
        raise ValueError("distribution and simulation describe different experiments")
    ts = set(dist.mass) | set(sim.counts)
    gap = sum(
        (abs(dist.probability(t) - sim.empirical_probability(t)) for t in ts),
        Fraction(0),
    )
    return gap / 2
