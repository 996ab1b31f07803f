"""
Quasi-polynomials with exact periodic coefficients.

``W_m(s)`` is a quasi-polynomial of degree ``m - 1``: a polynomial in ``s``
whose coefficients are periodic in ``s``.  We store one
:class:`PeriodicRational` per power of ``s``, which also covers mixed terms
such as ``s * cos(pi s)``.

Builtin tables are fitted from the DP counts rather than typed in, then
checked against the tabulated closed forms in ``REFERENCE_FORMS``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm

from .exact import PeriodicRational, rational_cos_turn, solve_exact
from .partitions import consecutive_table

BUILTIN_ORDERS = (2, 3, 5)


class UnsupportedOrder(ValueError):
    pass


class NonIntegralValue(ArithmeticError):
    pass


@dataclass(frozen=True)
class QuasiPolynomial:
    coeffs: tuple[PeriodicRational, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def period(self) -> int:
        return lcm(*(k.period for k in self.coeffs))

    @property
    def poly_coeffs(self) -> tuple[Fraction, ...]:
        """Constant part of each coefficient, i.e. the pure polynomial part."""
        return tuple(k.mean() for k in self.coeffs)

    @property
    def periodic_parts(self) -> tuple[PeriodicRational, ...]:
        """Each coefficient with its constant part removed."""
        return tuple(k - k.mean() for k in self.coeffs)

    def value(self, s: int) -> Fraction:
        acc = Fraction(0)
        for k in reversed(self.coeffs):
            acc = acc * s + k(s)
        return acc

    def evaluate(self, s: int) -> int:
        if s < 0:
            raise ValueError("s must be nonnegative")
        v = self.value(s)
        if v.denominator != 1:
            raise NonIntegralValue(f"quasi-polynomial gives {v} at s={s}")
        return v.numerator

    __call__ = evaluate


def evaluate(q: QuasiPolynomial, s: int) -> int:
    return q.evaluate(s)


def _fits(m: int, period: int, values) -> list[list[Fraction]] | None:
    """Per-residue coefficient rows for ``period``, or None if the data disagree."""
    rows = []
    for c in range(period):
        pts = [c + period * j for j in range(m)]
        vand = [[s**r for r in range(m)] for s in pts]
        ks = solve_exact(vand, [values[s] for s in pts])
        for j in (m, m + 1):
            s = c + period * j
            if sum(k * s**r for r, k in enumerate(ks)) != values[s]:
                return None
        rows.append(ks)
    return rows


def fit_consecutive(m: int) -> QuasiPolynomial:
    """
    Fit ``W_m`` exactly from DP counts.

    Tries each divisor of ``lcm(1..m)`` as the period, smallest first, and
    keeps the first whose per-residue polynomial fits also predict two
    further points in every residue class.
    """
    if m < 1:
        raise ValueError("m must be positive")
    full = lcm(*range(1, m + 1))
    values = consecutive_table(m, full * (m + 2))
    for period in (p for p in range(1, full + 1) if full % p == 0):
        rows = _fits(m, period, values)
        if rows is not None:
            break
    coeffs = tuple(
        PeriodicRational(period, tuple(row[r] for row in rows)).minimal() for r in range(m)
    )
    return QuasiPolynomial(coeffs)


# Closed forms as tabulated in the literature.  Each term is
# (coefficient, power of s, "cos"/"sin"/"1", turns numerator, turns denominator)
# standing for coefficient * s**power * trig(2*pi*num*s/den).
REFERENCE_FORMS = {
    2: [
        (Fraction(1, 2), 1, "1", 0, 1),
        (Fraction(3, 4), 0, "1", 0, 1),
        (Fraction(1, 4), 0, "cos", 1, 2),
    ],
    3: [
        (Fraction(1, 12), 2, "1", 0, 1),
        (Fraction(1, 2), 1, "1", 0, 1),
        (Fraction(47, 72), 0, "1", 0, 1),
        (Fraction(2, 9), 0, "cos", 1, 3),
        (Fraction(1, 8), 0, "cos", 1, 2),
    ],
    5: [
        (Fraction(1, 2880), 4, "1", 0, 1),
        (Fraction(1, 96), 3, "1", 0, 1),
        (Fraction(31, 288), 2, "1", 0, 1),
        (Fraction(85, 192), 1, "1", 0, 1),
        (Fraction(1, 64), 1, "cos", 1, 2),
        (Fraction(50651, 86400), 0, "1", 0, 1),
        (Fraction(1, 16), 0, "cos", 1, 4),
        (Fraction(1, 16), 0, "sin", 1, 4),
        (Fraction(2, 27), 0, "cos", 1, 3),
        (Fraction(2, 25), 0, "cos", 2, 5),
        (Fraction(15, 128), 0, "cos", 1, 2),
    ],
}


def trig_sqrt5(kind: str, turns: Fraction) -> tuple[Fraction, Fraction]:
    """
    Exact ``cos``/``sin`` of ``2*pi*turns`` as ``(a, b)`` meaning ``a + b*sqrt(5)``.

    Covers the rational angles plus the fifths of a turn, which is all the
    reference forms need.
    """
    turns = Fraction(turns)
    if kind == "1":
        return Fraction(1), Fraction(0)
    if kind == "sin":
        return trig_sqrt5("cos", turns - Fraction(1, 4))
    x = turns % 1
    if x.denominator == 5:
        k = x.numerator
        if k in (1, 4):
            return Fraction(-1, 4), Fraction(1, 4)
        return Fraction(-1, 4), Fraction(-1, 4)
    return rational_cos_turn(x), Fraction(0)


def reference_value(m: int, s: int) -> tuple[Fraction, Fraction]:
    """The tabulated closed form for ``W_m(s)``, exactly, in ``Q(sqrt 5)``."""
    a = b = Fraction(0)
    for coef, power, kind, num, den in REFERENCE_FORMS[m]:
        ta, tb = trig_sqrt5(kind, Fraction(num * s, den))
        scale = coef * s**power
        a += scale * ta
        b += scale * tb
    return a, b


def reference_residual(m: int, s: int) -> tuple[Fraction, Fraction]:
    """Tabulated closed form minus the true count, as ``a + b*sqrt(5)``."""
    a, b = reference_value(m, s)
    return a - consecutive_table(m, s)[s], b


def _check_against_reference(m: int, q: QuasiPolynomial):
    printed = [Fraction(0)] * m
    for coef, power, kind, _, _ in REFERENCE_FORMS[m]:
        if kind == "1":
            printed[power] += coef
    if list(q.poly_coeffs) != printed:
        raise RuntimeError(
            f"fitted polynomial part of W_{m} {q.poly_coeffs} != tabulated {printed}"
        )
    if q.poly_coeffs[-1] != Fraction(1, factorial(m - 1) * factorial(m)):
        raise RuntimeError(f"leading coefficient of W_{m} is wrong")


@lru_cache(maxsize=None)
def builtin_w(m: int) -> QuasiPolynomial:
    """The quasi-polynomial for ``W_m``, ``m`` in 2, 3, 5."""
    if m not in BUILTIN_ORDERS:
        raise UnsupportedOrder(f"no builtin quasi-polynomial for m={m}; have {BUILTIN_ORDERS}")
    q = fit_consecutive(m)
    _check_against_reference(m, q)
    return q
