"""Cross-validation battery behind the CLI `verify` subcommand.

Each check pits two independent routes to the same quantity against each
other — brute-force enumeration vs closed formula, recurrence vs explicit
sum, nested overlap sum vs inclusion-exclusion, simulation vs exact law —
and reports the first mismatching tuple with both values when they
disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from . import abide, eabide, legacy, plan, simulate
from .combinatorics import binomial, factorial, stirling2, stirling2_by_formula
from .model import Params, Scheme

__all__ = ["CheckResult", "run_all"]

# Skip exhaustive EABIDE points whose n^{mk} sequence space exceeds this.
_ENUMERATION_BUDGET = 400_000


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _grid(n_max: int, m_max: int, k_max: int):
    for n in range(1, n_max + 1):
        for m in range(1, min(n, m_max) + 1):
            for k in range(1, k_max + 1):
                yield Params(n=n, m=m, k=k)


def _enumerate_abide(p: Params) -> dict[int, Fraction]:
    """Union-size tally over every ordered tuple of m-subsets."""
    subsets = list(combinations(range(p.n), p.m))
    tally: dict[int, int] = {}
    for pick in product(subsets, repeat=p.k):
        covered: set[int] = set()
        for s in pick:
            covered.update(s)
        tally[len(covered)] = tally.get(len(covered), 0) + 1
    total = len(subsets) ** p.k
    return {t: Fraction(c, total) for t, c in tally.items()}


def _enumerate_eabide(p: Params) -> dict[int, Fraction]:
    """Distinct-node tally over every sequence of mk uniform draws."""
    cells = p.m * p.k
    tally: dict[int, int] = {}
    for seq in product(range(p.n), repeat=cells):
        t = len(set(seq))
        tally[t] = tally.get(t, 0) + 1
    return {t: Fraction(c, p.n**cells) for t, c in tally.items()}


def check_abide_enumeration(n_max: int, m_max: int, k_max: int) -> CheckResult:
    points = 0
    for p in _grid(n_max, m_max, k_max):
        expected = _enumerate_abide(p)
        got = dict(abide.coverage_distribution(p).items())
        if got != expected:
            return CheckResult(
                "abide-enumeration",
                False,
                f"mismatch at {p}: law={got}, enumeration={expected}",
            )
        points += 1
    return CheckResult("abide-enumeration", True, f"{points} parameter sets, exact match")


def check_eabide_enumeration(n_max: int, m_max: int, k_max: int) -> CheckResult:
    points = 0
    for p in _grid(n_max, m_max, k_max):
        if p.n ** (p.m * p.k) > _ENUMERATION_BUDGET:
            continue
        expected = _enumerate_eabide(p)
        got = dict(eabide.coverage_distribution_star(p).items())
        if got != expected:
            return CheckResult(
                "eabide-enumeration",
                False,
                f"mismatch at {p}: law={got}, enumeration={expected}",
            )
        points += 1
    return CheckResult("eabide-enumeration", True, f"{points} parameter sets, exact match")


def check_scheme_reduction(n_max: int, m_max: int, k_max: int) -> CheckResult:
    """EABIDE law of (n, m, k) must equal the ABIDE law of (n, 1, km)."""
    points = 0
    for p in _grid(n_max, m_max, k_max):
        star = dict(eabide.coverage_distribution_star(p).items())
        reduced = dict(abide.coverage_distribution(eabide.reduce_to_abide(p)).items())
        if star != reduced:
            return CheckResult(
                "scheme-reduction",
                False,
                f"mismatch at {p}: eabide={star}, reduced abide={reduced}",
            )
        points += 1
    return CheckResult("scheme-reduction", True, f"{points} parameter sets, exact match")


def check_stirling_routes(n_top: int = 40, cells_top: int = 30) -> CheckResult:
    """Recurrence vs explicit sum for S(N, K); Stirling vs direct sum for R."""
    for n in range(n_top + 1):
        for k in range(n + 1):
            a = stirling2(n, k)
            b = stirling2_by_formula(n, k)
            if a != b:
                return CheckResult(
                    "stirling-routes",
                    False,
                    f"S({n},{k}): recurrence={a}, explicit sum={b}",
                )
    for cells in range(1, cells_top + 1):
        for t in range(1, cells + 1):
            a = factorial(t) * stirling2(cells, t)
            b = eabide.r_count_direct(1, cells, t)
            if a != b:
                return CheckResult(
                    "stirling-routes",
                    False,
                    f"R with mk={cells}, t={t}: t!*S={a}, direct sum={b}",
                )
    return CheckResult(
        "stirling-routes",
        True,
        f"S(N,K) agrees for N<={n_top}; R routes agree for mk<={cells_top}",
    )


def check_mean_identities(n_max: int, m_max: int, k_max: int) -> CheckResult:
    points = 0
    for p in _grid(n_max, m_max, k_max):
        summed = abide.mean_coverage(p)
        closed = abide.mean_coverage_closed_form(p)
        if summed != closed:
            return CheckResult(
                "mean-identities",
                False,
                f"abide mean at {p}: sum={summed}, closed form={closed}",
            )
        summed = eabide.mean_coverage_star(p)
        closed = eabide.mean_coverage_star_closed_form(p)
        if summed != closed:
            return CheckResult(
                "mean-identities",
                False,
                f"eabide mean at {p}: sum={summed}, closed form={closed}",
            )
        points += 1
    return CheckResult("mean-identities", True, f"{points} parameter sets, both schemes")


def check_normalization(n_max: int, m_max: int, k_max: int) -> CheckResult:
    # CoverageDistribution raises if masses do not sum to exactly 1, so
    # constructing every grid distribution IS the check.
    points = 0
    for p in _grid(n_max, m_max, k_max):
        try:
            abide.coverage_distribution(p)
            eabide.coverage_distribution_star(p)
        except ValueError as exc:
            return CheckResult("normalization", False, f"at {p}: {exc}")
        points += 1
    return CheckResult("normalization", True, f"{points} parameter sets, both schemes")


def check_markov_dominance(n_max: int, m_max: int, k_max: int) -> CheckResult:
    points = 0
    for p in _grid(n_max, m_max, k_max):
        for scheme in Scheme:
            dist = plan.exact_distribution(p, scheme)
            for t_min in range(1, p.n + 1):
                tail = dist.tail(t_min)
                bound = plan.markov_bound(p, scheme, t_min)
                if tail > bound:
                    return CheckResult(
                        "markov-dominance",
                        False,
                        f"at {p} {scheme.value} t_min={t_min}: tail={tail} > bound={bound}",
                    )
                points += 1
    return CheckResult("markov-dominance", True, f"{points} tail/bound comparisons")


def check_legacy_equivalence(
    k: int, n_max: int, m_max: int, term_budget: int = legacy.DEFAULT_TERM_BUDGET
) -> CheckResult:
    points = 0
    for n in range(1, n_max + 1):
        for m in range(1, min(n, m_max) + 1):
            p = Params(n=n, m=m, k=k)
            total = Fraction(0)
            for t in range(0, n + 2):
                nested = legacy.legacy_probability(p, t, term_budget=term_budget)
                direct = abide.coverage_probability(p, t)
                if nested != direct:
                    return CheckResult(
                        "legacy-equivalence",
                        False,
                        f"at {p} t={t}: nested sum={nested}, inclusion-exclusion={direct}",
                    )
                total += nested
            if total != 1:
                return CheckResult(
                    "legacy-equivalence",
                    False,
                    f"nested-sum law at {p} sums to {total}, not 1",
                )
            points += 1
    return CheckResult(
        "legacy-equivalence", True, f"{points} parameter sets at k={k}, exact match"
    )


def check_simulation_agreement(
    trials: int, seed: int, tolerance: Fraction = Fraction(3, 100)
) -> CheckResult:
    points = []
    for n, m, k in ((10, 2, 3), (20, 4, 2)):
        p = Params(n=n, m=m, k=k)
        for scheme in Scheme:
            dist = plan.exact_distribution(p, scheme)
            sim = simulate.run_simulation(p, scheme, trials=trials, seed=seed)
            tv = simulate.total_variation(dist, sim)
            if tv > tolerance:
                return CheckResult(
                    "simulation-agreement",
                    False,
                    f"at {p} {scheme.value}: TV={float(tv):.4f} exceeds "
                    f"{float(tolerance):.4f} at {trials} trials (seed={seed})",
                )
            points.append(float(tv))
    return CheckResult(
        "simulation-agreement",
        True,
        f"max TV {max(points):.4f} <= {float(tolerance):.4f} at {trials} trials",
    )


def run_all(
    n_max: int = 5,
    m_max: int = 3,
    k_max: int = 2,
    trials: int = 25_000,
    seed: int = 0xAB1DE,
    include_legacy: bool = True,
    legacy_k: int = 4,
) -> list[CheckResult]:
    """Run the whole battery with one shared grid budget."""
    results = [
        check_abide_enumeration(n_max, m_max, k_max),
        check_eabide_enumeration(n_max, m_max, k_max),
        check_scheme_reduction(n_max, m_max, max(k_max, 3)),
        check_stirling_routes(),
        check_mean_identities(n_max, m_max, max(k_max, 3)),
        check_normalization(n_max, m_max, max(k_max, 3)),
        check_markov_dominance(n_max, m_max, k_max),
        check_simulation_agreement(trials=trials, seed=seed),
    ]
    if include_legacy:
        results.append(check_legacy_equivalence(k=legacy_k, n_max=n_max, m_max=m_max))
    return results
