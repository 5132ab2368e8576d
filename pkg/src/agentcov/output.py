"""Serialization of exact results: JSON/CSV records and decimal rendering.

Exact rationals are emitted as decimal-string numerator/denominator pairs
("num"/"den") because arbitrary-precision integers overflow native JSON
numbers; an "approx" field carries a rounded decimal view for humans.
The num/den pair round-trips losslessly through parse_exact.
"""

from __future__ import annotations

import csv
import io
import json
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Any, Mapping

from .model import CoverageDistribution
from .plan import PlanOutcome
from .simulate import SimulationResult

__all__ = [
    "DEFAULT_DIGITS",
    "render_decimal",
    "exact_fields",
    "parse_exact",
    "distribution_record",
    "distribution_csv",
    "simulation_record",
    "simulation_csv",
    "plan_record",
    "plan_csv",
    "to_json",
]

DEFAULT_DIGITS = 15

TOOL_NAME = "agentcov"


def _tool_metadata() -> dict[str, str]:
    from . import __version__

    return {"name": TOOL_NAME, "version": __version__}


def render_decimal(value: Fraction, digits: int = DEFAULT_DIGITS) -> str:
    """`value` as a decimal string with `digits` significant digits, half-even."""
    if digits < 1:
        raise ValueError("digits must satisfy digits >= 1")
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def exact_fields(value: Fraction, digits: int = DEFAULT_DIGITS) -> dict[str, str]:
    """{"num", "den", "approx"} triple for one exact rational."""
    return {
        "num": str(value.numerator),
        "den": str(value.denominator),
        "approx": render_decimal(value, digits),
    }


def parse_exact(fields: Mapping[str, str]) -> Fraction:
    """Inverse of exact_fields; the approx view is ignored."""
    return Fraction(int(fields["num"]), int(fields["den"]))


def distribution_record(dist: CoverageDistribution, digits: int = DEFAULT_DIGITS) -> dict[str, Any]:
    return {
        "tool": _tool_metadata(),
        "command": "dist",
        "scheme": dist.scheme.value,
        "params": {"n": dist.params.n, "m": dist.params.m, "k": dist.params.k},
        "rows": [{"t": t, **exact_fields(p, digits)} for t, p in dist.items()],
        "mean": exact_fields(dist.mean(), digits),
    }


def distribution_csv(dist: CoverageDistribution, digits: int = DEFAULT_DIGITS) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["t", "num", "den", "approx"])
    for t, p in dist.items():
        writer.writerow([t, *exact_fields(p, digits).values()])
    writer.writerow(["mean", *exact_fields(dist.mean(), digits).values()])
    return out.getvalue()


def simulation_record(
    sim: SimulationResult,
    digits: int = DEFAULT_DIGITS,
    exact: CoverageDistribution | None = None,
    total_variation: Fraction | None = None,
) -> dict[str, Any]:
    record: dict[str, Any] = {
        "tool": _tool_metadata(),
        "command": "simulate",
        "scheme": sim.scheme.value,
        "params": {"n": sim.params.n, "m": sim.params.m, "k": sim.params.k},
        "trials": sim.trials,
        "seed": sim.seed,
        "rows": [
            {"t": t, "count": c, **exact_fields(Fraction(c, sim.trials), digits)}
            for t, c in sorted(sim.counts.items())
        ],
    }
    if exact is not None and total_variation is not None:
        record["comparison"] = {
            "exact_rows": [{"t": t, **exact_fields(p, digits)} for t, p in exact.items()],
            "total_variation": exact_fields(total_variation, digits),
        }
    return record


def simulation_csv(
    sim: SimulationResult,
    digits: int = DEFAULT_DIGITS,
    exact: CoverageDistribution | None = None,
    total_variation: Fraction | None = None,
) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    compare = exact is not None and total_variation is not None
    header = ["t", "count", "num", "den", "approx"]
    if compare:
        header += ["exact_num", "exact_den", "exact_approx"]
    writer.writerow(header)
    ts = sorted(set(sim.counts) | (set(exact.mass) if compare else set()))
    for t in ts:
        count = sim.counts.get(t, 0)
        row = [t, count, *exact_fields(Fraction(count, sim.trials), digits).values()]
        if compare:
            row += [*exact_fields(exact.probability(t), digits).values()]
        writer.writerow(row)
    if compare:
        writer.writerow(
            ["total_variation", "", *exact_fields(total_variation, digits).values(), "", "", ""]
        )
    return out.getvalue()


def plan_record(outcome: PlanOutcome, digits: int = DEFAULT_DIGITS) -> dict[str, Any]:
    q = outcome.query
    return {
        "tool": _tool_metadata(),
        "command": "plan",
        "scheme": q.scheme.value,
        "query": {
            "n": q.n,
            "m": q.m,
            "t_min": q.t_min,
            "confidence": exact_fields(q.confidence, digits),
            "k_max": q.k_max,
        },
        "feasible": outcome.feasible,
        "agents": outcome.agents,
        "tail": exact_fields(outcome.tail, digits),
        "reason": outcome.reason,
    }


def plan_csv(outcome: PlanOutcome, digits: int = DEFAULT_DIGITS) -> str:
    q = outcome.query
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        ["scheme", "n", "m", "t_min", "confidence", "k_max", "feasible", "agents",
         "tail_num", "tail_den", "tail_approx", "reason"]
    )
    writer.writerow(
        [
            q.scheme.value,
            q.n,
            q.m,
            q.t_min,
            f"{q.confidence.numerator}/{q.confidence.denominator}",
            q.k_max,
            outcome.feasible,
            outcome.agents if outcome.agents is not None else "",
            *exact_fields(outcome.tail, digits).values(),
            outcome.reason or "",
        ]
    )
    return out.getvalue()


def to_json(record: Mapping[str, Any]) -> str:
    return json.dumps(record, indent=2) + "\n"
