"""Brute-force reference computations, deliberately naive and independent of the package."""
from itertools import product


def brute_w(s, parts):
    """Count nonnegative x with sum(d_i x_i) == s by exhaustive search."""
    ranges = [range(s // d + 1) for d in parts]
    return sum(1 for xs in product(*ranges) if sum(d * x for d, x in zip(parts, xs)) == s)


def brute_p(s, n, m):
    """Count solutions of sum r x_r == s, r = 1..m, with sum x_r <= n."""
    ranges = [range(min(s // r, n) + 1) for r in range(1, m + 1)]
    count = 0
    for xs in product(*ranges):
        if sum(xs) <= n and sum(r * x for r, x in zip(range(1, m + 1), xs)) == s:
            count += 1
    return count


def pascal(n, k):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[k]


def compositions(r):
    """All ordered tuples of positive integers summing to r."""
    if r == 0:
        yield ()
        return
    for first in range(1, r + 1):
        for rest in compositions(r - first):
            yield (first,) + rest


def phi_by_compositions(r, U):
    """Expand 1/(1 - sum U(k) x^k) directly: one product per composition of r."""
    total = 0
    for comp in compositions(r):
        term = 1
        for k in comp:
            term *= U(k)
        total += term
    return total


def poly_eval(coeffs, x):
    return sum(c * x**i for i, c in enumerate(coeffs))
