"""Big-integer counting and enumeration used by every construction.

All counts are plain Python ints, so nothing overflows.
"""

from itertools import combinations
from math import comb, factorial

from .errors import RangeError, TotalMismatch


def binomial(n, k):
    """n choose k, zero outside 0 <= k <= n."""
    if n < 0:
        raise RangeError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(n, parts):
    """n! / prod(k_i!) for an occupation vector summing to n."""
    parts = tuple(parts)
    if any(p < 0 for p in parts):
        raise RangeError(f"occupation parts must be non-negative: {parts}")
    if sum(parts) != n:
        raise TotalMismatch(f"occupation {parts} does not sum to {n}")
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def _stars_and_bars(m, num_vars):
    # solutions of x_1 + ... + x_num_vars = m with x_j >= 0
    if m < 0:
        return 0
    return comb(m + num_vars - 1, num_vars - 1)


def bounded_composition_count(num_vars, k, bounds):
    """Number of (x_1..x_n) with sum k and 0 <= x_j <= bounds[j].

    Uses the generating-function closed forms: the single-cap sum when all
    caps agree, the subset-sum form otherwise.
    """
    bounds = tuple(bounds)
    if len(bounds) != num_vars:
        raise RangeError(f"expected {num_vars} bounds, got {len(bounds)}")
    if any(b < 0 for b in bounds):
        raise RangeError(f"bounds must be non-negative: {bounds}")
    if k < 0 or k > sum(bounds):
        return 0
    if num_vars == 0:
        return 1
    if len(set(bounds)) == 1:
        d = bounds[0] + 1
        return sum(
            (-1) ** l * comb(num_vars, l) * _stars_and_bars(k - l * d, num_vars)
            for l in range(min(num_vars, k // d) + 1)
        )
    total = 0
    sizes = [b + 1 for b in bounds]
    for r in range(num_vars + 1):
        for subset in combinations(sizes, r):
            total += (-1) ** r * _stars_and_bars(k - sum(subset), num_vars)
    return total


def enumerate_bounded_compositions(num_vars, k, bounds):
    """All tuples with sum k and entries 0..bounds[j], ascending lexicographic."""
    bounds = tuple(bounds)
    if len(bounds) != num_vars:
        raise RangeError(f"expected {num_vars} bounds, got {len(bounds)}")
    if k < 0:
        return []
    # room[j] = largest sum the tail positions j.. can still absorb
    room = [0] * (num_vars + 1)
    for j in range(num_vars - 1, -1, -1):
        room[j] = room[j + 1] + bounds[j]
    out = []
    prefix = []

    def rec(j, left):
        if j == num_vars:
            if left == 0:
                out.append(tuple(prefix))
            return
        lo = max(0, left - room[j + 1])
        hi = min(bounds[j], left)
        for v in range(lo, hi + 1):
            prefix.append(v)
            rec(j + 1, left - v)
            prefix.pop()

    rec(0, k)
    return out


def enumerate_occupations(n, d):
    """Weak compositions of n into d parts, descending lexicographic order.

    n = 0 is accepted and yields the single all-zero vector; d = 0 yields
    the empty vector when n = 0 and nothing otherwise.
    """
    if n < 0 or d < 0:
        raise RangeError(f"need n >= 0 and d >= 0, got n={n}, d={d}")
    if d == 0:
        return [()] if n == 0 else []
    asc = enumerate_bounded_compositions(d, n, (n,) * d)
    return asc[::-1]


def count_distinct_monomials(n, d, k_sub):
    """Number of distinct monomials in (1 + x + ... + x^(k+1) + y_(k+2) + ... + y_(d-1))^n.

    Grouping by K, the number of factors taken from the x-polynomial, each
    K contributes K(k+1)+1 powers of x times the monomials of degree n-K in
    the d-k-2 free variables.
    """
    if d < 2:
        raise RangeError(f"need d >= 2, got {d}")
    if not 0 <= k_sub <= d - 2:
        raise RangeError(f"substitution count must lie in [0, {d - 2}], got {k_sub}")
    if n < 1:
        raise RangeError(f"need n >= 1, got {n}")
    tail = d - k_sub - 2
    if tail == 0:
        return n * (k_sub + 1) + 1
    return sum((K * (k_sub + 1) + 1) * comb(n - K + tail - 1, tail - 1) for K in range(n + 1))
