"""
Gaussian polynomials ``G(n, m; t)`` and the constrained partition counts
``P_n^m(s)`` they generate, computed by several independent routes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .exact import IntPolynomial, poly_div_exact, poly_prod
from .partitions import consecutive_table, constrained_table

METHODS = ("division", "recurrence", "toeplitz", "oracle", "theorem2")


class OutOfTheoremRange(ValueError):
    pass


@dataclass(frozen=True)
class GaussianTable:
    n: int
    m: int
    coeffs: IntPolynomial
    method: str

    @property
    def mu1(self) -> int:
        return min(self.n, self.m)

    @property
    def mu2(self) -> int:
        return max(self.n, self.m)

    def __getitem__(self, s: int) -> int:
        return self.coeffs[s]

    def values(self, upto: int | None = None) -> list[int]:
        upto = self.n * self.m if upto is None else upto
        return [self.coeffs[s] for s in range(upto + 1)]


def _check_args(n: int, m: int):
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be positive, got n={n}, m={m}")


def gaussian_by_division(n: int, m: int) -> GaussianTable:
    _check_args(n, m)
    num = poly_prod(IntPolynomial.one_minus_t_pow(i) for i in range(1, n + m + 1))
    den = poly_prod(
        [IntPolynomial.one_minus_t_pow(u) for u in range(1, n + 1)]
        + [IntPolynomial.one_minus_t_pow(v) for v in range(1, m + 1)]
    )
    return GaussianTable(n, m, poly_div_exact(num, den), "division")


def gaussian_by_recurrence(n: int, m: int) -> GaussianTable:
    """q-Pascal: ``G(a, b) = G(a, b-1) + t**b * G(a-1, b)``, no division."""
    _check_args(n, m)
    # row[b] holds G(a, b) for the current a, as a coefficient list.
    row = [[1] for _ in range(m + 1)]
    for a in range(1, n + 1):
        new = [[1]]
        for b in range(1, m + 1):
            left, up = new[b - 1], row[b]
            size = max(len(left), len(up) + b)
            c = left + [0] * (size - len(left))
            for i, x in enumerate(up):
                c[i + b] += x
            new.append(c)
        row = new
    return GaussianTable(n, m, IntPolynomial(tuple(row[m])), "recurrence")


def gaussian_by_oracle(n: int, m: int) -> GaussianTable:
    _check_args(n, m)
    return GaussianTable(n, m, IntPolynomial(tuple(constrained_table(n, m))), "oracle")


def theorem2_piecewise(n: int, m: int, g: int) -> int:
    """
    ``P_n^m(g)`` from unconstrained counts alone, valid for ``0 <= g <= n + m``.

    Up to ``max(n, m)`` the constraint is inactive beyond the smaller bound and
    ``P = W_min(g)``; from there to ``n + m`` an inclusion-exclusion of the
    three unconstrained counts holds.  At ``g = max(n, m)`` both apply and
    agree; the first is used.
    """
    _check_args(n, m)
    if g < 0:
        raise ValueError("g must be nonnegative")
    if g > n + m:
        raise OutOfTheoremRange(f"g={g} exceeds n+m={n + m}")
    mu1, mu2 = min(n, m), max(n, m)
    if g <= mu2:
        return consecutive_table(mu1, g)[g]
    return consecutive_table(n, g)[g] + consecutive_table(m, g)[g] - consecutive_table(n + m, g)[g]


def theorem2_branches(n: int, m: int, g: int) -> dict[str, int]:
    """Every closed-form branch whose range contains ``g``, keyed by range."""
    mu1, mu2 = min(n, m), max(n, m)
    out = {}
    if 0 <= g <= mu1:
        out["0..mu1"] = consecutive_table(mu1, g)[g]
    if mu1 <= g <= mu2:
        out["mu1..mu2"] = consecutive_table(mu1, g)[g]
    if mu2 <= g <= n + m:
        out["mu2..n+m"] = (
            consecutive_table(n, g)[g] + consecutive_table(m, g)[g] - consecutive_table(n + m, g)[g]
        )
    return out


def theorem2_values(n: int, m: int) -> list[int]:
    return [theorem2_piecewise(n, m, g) for g in range(n + m + 1)]


def theorem1_violations(table: GaussianTable, transposed: GaussianTable | None = None) -> list[str]:
    """
    Names of the symmetry, endpoint and unimodality properties that fail.

    ``transposed`` is a table for ``(m, n)``; when given, the two are
    compared coefficient by coefficient.
    """
    n, m, c = table.n, table.m, table.coeffs
    top = n * m
    bad = []
    if c.degree > top:
        bad.append(f"vanishing: nonzero coefficient beyond s={top}")
    if c[0] != 1 or c[top] != 1:
        bad.append(f"endpoints: P(0)={c[0]}, P({top})={c[top]}")
    if transposed is not None and transposed.values(top) != table.values(top):
        bad.append("n<->m symmetry")
    if any(c[s] != c[top - s] for s in range(top + 1)):
        bad.append("palindrome")
    if any(c[s] < c[s - 1] for s in range(1, top // 2 + 1)):
        bad.append("unimodality")
    return bad


@dataclass
class ResidualReport:
    n: int
    m: int
    deltas: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(d == 0 for d in self.deltas)

    def nonzero(self) -> list[tuple[int, int]]:
        return [(g, d) for g, d in enumerate(self.deltas) if d]


def check_convolution_residual(
    n: int, m: int, g_max: int, table: GaussianTable | None = None
) -> ResidualReport:
    """
    For each ``g <= g_max`` evaluate
    ``sum_s P(s) W_{n+m}(g-s) - W_n(s) W_m(g-s)``, which must vanish because
    ``G(n, m) * M(n+m) = M(n) * M(m)`` as power series.
    """
    _check_args(n, m)
    if table is None:
        table = gaussian_by_division(n, m)
    wn, wm, wnm = (consecutive_table(k, g_max) for k in (n, m, n + m))
    p = table.values(g_max)
    report = ResidualReport(n, m)
    for g in range(g_max + 1):
        delta = sum(p[s] * wnm[g - s] - wn[s] * wm[g - s] for s in range(g + 1))
        report.deltas.append(delta)
    return report


@dataclass
class StabilityReport:
    n: int
    s: int
    expected: int
    values: dict[int, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v == self.expected for v in self.values.values())


def corollary1_check(n: int, s: int, m_start: int, m_stop: int | None = None) -> StabilityReport:
    """
    ``P_n^m(s)`` equals ``W_n(s)`` once ``m >= s``; check every ``m`` from
    ``max(m_start, s)`` through ``m_stop`` (default: ten further values).
    """
    lo = max(m_start, s, 1)
    hi = lo + 10 if m_stop is None else m_stop
    report = StabilityReport(n, s, consecutive_table(n, s)[s])
    for m in range(lo, hi + 1):
        report.values[m] = constrained_table(n, m, s)[s] if s <= n * m else 0
    return report


def compare_tables(tables: list[GaussianTable], upto: int) -> list[dict]:
    """Discrepancy records for every pair of tables over ``0..upto``."""
    out = []
    for a, b in combinations(tables, 2):
        for s in range(upto + 1):
            if a[s] != b[s]:
                out.append(
                    {"method_a": a.method, "method_b": b.method, "index": s,
                     "value_a": a[s], "value_b": b[s]}
                )
    return out
