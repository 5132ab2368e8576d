"""Arbitrary-precision counting primitives.

Everything in this module is exact integer arithmetic. The alternating
inclusion-exclusion sums built on top of these primitives cancel
catastrophically in floating point, so no floats appear anywhere here;
a decimal view of results is produced only at output boundaries.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from math import factorial as _math_factorial

__all__ = ["binomial", "factorial", "stirling2", "stirling2_by_formula"]

# stirling2 cross-checks its two evaluation routes on every call up to this
# N; beyond it the check would cost more than the computation it guards.
_CROSS_CHECK_MAX_N = 64


def binomial(n: int, r: int) -> int:
    """Binomial coefficient C(n, r), with value 0 outside 0 <= r <= n.

    The zero convention makes alternating sums and nested binomial chains
    self-pruning: terms with out-of-range arguments vanish instead of
    raising, which is exactly the behaviour the coverage formulas need.
    """
    if r < 0 or n < 0 or r > n:
        return 0
    return comb(n, r)


def factorial(n: int) -> int:
    """Exact n! for n >= 0."""
    return _math_factorial(n)


@lru_cache(maxsize=128)
def _stirling_row(n: int) -> tuple[int, ...]:
    # Row n of the Stirling-second-kind triangle, via the recurrence
    # S(i, j) = j*S(i-1, j) + S(i-1, j-1). Built iteratively so deep rows
    # never hit the recursion limit; lru_cache keeps this thread-safe.
    row = [1]  # S(0, 0)
    for i in range(1, n + 1):
        nxt = [0] * (i + 1)
        for j in range(1, i + 1):
            above = row[j] if j < i else 0
            nxt[j] = j * above + row[j - 1]
        row = nxt
    return tuple(row)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k).

    Counts the partitions of an n-element set into k nonempty blocks.
    S(0, 0) = 1, S(n, 0) = 0 for n > 0, and S(n, k) = 0 for k > n.

    The value comes from the triangular recurrence (rows are cached and
    shared across calls); debug builds additionally assert agreement with
    the independent explicit-sum route for n <= 64.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    value = _stirling_row(n)[k]
    if __debug__ and n <= _CROSS_CHECK_MAX_N:
        assert value == stirling2_by_formula(n, k), (n, k)
    return value


def stirling2_by_formula(n: int, k: int) -> int:
    """S(n, k) via the explicit sum (1/k!)·Σ_{j=0}^{k} (-1)^j C(k,j)(k-j)^n.

    Independent of the recurrence route; kept public as the second leg of
    the dual-route consistency checks.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    signed = sum((-comb(k, j) if j & 1 else comb(k, j)) * (k - j) ** n for j in range(k + 1))
    value, remainder = divmod(signed, _math_factorial(k))
    assert remainder == 0, (n, k)
    return value
