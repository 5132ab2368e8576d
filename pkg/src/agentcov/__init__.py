"""Exact and simulated node-coverage analytics for randomly roving monitor agents.

Computes the exact probability law of the number of distinct nodes covered
when k agents each sample a network of n nodes — either as uniform
m-subsets (ABIDE) or as m independent uniform draws per agent (EABIDE) —
plus the tooling around it: closed-form means, tail bounds, minimum-agent
planning, a seeded Monte Carlo oracle, and a cross-verification battery.
All probability arithmetic is exact rational; floats appear only in
rendered output.
"""

from .abide import (
    coverage_distribution,
    coverage_probability,
    mean_coverage,
    mean_coverage_closed_form,
    q_count,
)
from .combinatorics import binomial, factorial, stirling2, stirling2_by_formula
from .eabide import (
    coverage_distribution_star,
    coverage_probability_star,
    mean_coverage_star,
    mean_coverage_star_closed_form,
    r_count,
    r_count_direct,
    reduce_to_abide,
)
from .legacy import (
    EvaluationCancelledError,
    TermBudgetExceededError,
    legacy_probability,
)
from .model import CoverageDistribution, Params, Scheme
from .plan import (
    PlanOutcome,
    PlanQuery,
    closed_form_mean,
    exact_distribution,
    markov_bound,
    min_agents,
    tail_probability,
)
from .simulate import (
    SimulationResult,
    VisitMatrix,
    run_simulation,
    sample_trial,
    total_variation,
    trial_rng,
    union_size,
)

__version__ = "0.1.0"

__all__ = [
    "Params",
    "Scheme",
    "CoverageDistribution",
    "binomial",
    "factorial",
    "stirling2",
    "stirling2_by_formula",
    "q_count",
    "coverage_probability",
    "coverage_distribution",
    "mean_coverage",
    "mean_coverage_closed_form",
    "r_count",
    "r_count_direct",
    "coverage_probability_star",
    "coverage_distribution_star",
    "reduce_to_abide",
    "mean_coverage_star",
    "mean_coverage_star_closed_form",
    "legacy_probability",
    "TermBudgetExceededError",
    "EvaluationCancelledError",
    "VisitMatrix",
    "SimulationResult",
    "trial_rng",
    "sample_trial",
    "union_size",
    "run_simulation",
    "total_variation",
    "PlanQuery",
    "PlanOutcome",
    "exact_distribution",
    "closed_form_mean",
    "tail_probability",
    "markov_bound",
    "min_agents",
    "__version__",
]
