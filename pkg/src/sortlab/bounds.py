"""Numeric floors from counting arguments.

Each solver asks how small an operation budget could be before there are too
few distinct histories to tell n! inputs apart, and returns the smallest
budget that survives.  All logarithms are base 2 and results are measured in
bits.  The constant terms of the underlying inequalities are dropped, which
only lowers the floors, so measured averages should clear them with room.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class BudgetResult:
    """A solved budget floor with its certificate.

    bound_value is the smallest count satisfying the budget inequality;
    budget_lhs_at_bound and budget_rhs are the two sides, in bits, evaluated
    at that count.  warning carries a regime note when the inputs fall outside
    the range the inequality was built for.
    """

    n: int
    p: int | None
    bound_value: int
    budget_lhs_at_bound: float
    budget_rhs: float
    warning: str | None = None


def log2_factorial(n: int) -> float:
    """log2(n!) via the log-gamma function."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return math.lgamma(n + 1) / math.log(2.0)


def log_divisions(total: int, cells: int) -> float:
    """log2 of the number of ways to split `total` into `cells` ordered
    nonnegative summands, i.e. log2 C(total + cells - 1, cells - 1).

    Computed with log-gamma; exact big-integer evaluation agrees to well under
    1e-6 bits for arguments below 1e4 and serves as the testing oracle.
    """
    if total < 0:
        raise ValueError("total must be >= 0")
    if cells < 1:
        raise ValueError("cells must be >= 1")
    return (math.lgamma(total + cells) - math.lgamma(total + 1)
            - math.lgamma(cells)) / math.log(2.0)


def shellsort_move_bound(n: int, p: int) -> BudgetResult:
    """Smallest total move count M whose split count covers the input entropy.

    A run is summarized by n*p per-element pass shift counts that sum to M,
    and that summary determines the input.  There are C(M + np - 1, np - 1)
    summaries for a given M, so M must satisfy

        log2 C(M + np - 1, np - 1)  >=  log2 n! - 4 log2 n

    for all but an O(1/n) fraction of inputs.  Returns the smallest such M
    (0 when the right side is nonpositive).  Outside p <= log2 n the result
    is still computed but flagged, since the slack term assumed that regime.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if p < 1:
        raise ValueError("p must be >= 1")
    warning = None
    if p > math.log2(n):
        warning = f"p={p} exceeds log2(n)={math.log2(n):.2f}; floor derived for p <= log2 n"
    rhs = log2_factorial(n) - 4.0 * math.log2(n)
    cells = n * p
    if rhs <= 0.0:
        return BudgetResult(n, p, 0, log_divisions(0, cells), rhs, warning)
    hi = 1
    while log_divisions(hi, cells) < rhs:
        hi *= 2
    lo = 0  # lo always violates, hi always satisfies
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if log_divisions(mid, cells) >= rhs:
            hi = mid
        else:
            lo = mid
    return BudgetResult(n, p, hi, log_divisions(hi, cells), rhs, warning)


def sequential_stack_bound(n: int) -> BudgetResult:
    """Fewest serial stacks k consistent with the push/pop encoding budget.

    A k-stack run is pinned down by 2kn push/pop bits, so 2kn must reach
    log2 n! - log2 n.  Returns ceil of the solution, clamped to 1 because one
    stack is always needed; the clamp can only matter for tiny n where the
    right side is not positive.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    rhs = log2_factorial(n) - math.log2(n)
    k = max(1, math.ceil(rhs / (2.0 * n)))
    return BudgetResult(n, None, k, 2.0 * k * n, rhs)


def parallel_device_bound(n: int) -> BudgetResult:
    """Fewest parallel devices T consistent with the move encoding budget.

    A run on T parallel devices is a sequence of exactly 2n device choices,
    each costing log2 T bits, so 2n log2 T must reach log2 n! - log2 n.  The
    same floor applies to parallel stacks and parallel queues.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    rhs = log2_factorial(n) - math.log2(n)
    exponent = max(rhs, 0.0) / (2.0 * n)
    t = max(1, math.ceil(2.0 ** exponent))
    return BudgetResult(n, None, t, 2.0 * n * math.log2(t) if t > 1 else 0.0, rhs)


def lis_upper_bound(n: int) -> float:
    """e * sqrt(n): no permutation that is within log n bits of incompressible
    has a longer increasing subsequence, and almost all permutations qualify."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.e * math.sqrt(n)
