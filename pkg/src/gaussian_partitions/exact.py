"""
Exact integer polynomials and periodic rational sequences.

A polynomial is a tuple of Python ints, ``coeffs[i]`` being the coefficient
of ``t**i``.  Trailing zeros are always stripped, so the zero polynomial has
an empty coefficient tuple.  Python ints are arbitrary precision, so nothing
here ever rounds.

Multiplication is schoolbook convolution.  ``poly_mul`` is the single entry
point used by the rest of the package; a faster backend can replace its body
without touching callers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Sequence


class NonExactDivision(ArithmeticError):
    """Raised when a polynomial quotient would leave a remainder."""

    def __init__(self, index: int, remainder: int):
        self.index = index
        self.remainder = remainder
        super().__init__(
            f"division is not exact: remainder coefficient {remainder} at t^{index}"
        )


class NonUnitConstantTerm(ArithmeticError):
    pass


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> IntPolynomial:
        return cls((0,) * power + (coeff,))

    @classmethod
    def one_minus_t_pow(cls, d: int) -> IntPolynomial:
        """The binomial ``1 - t**d`` for ``d >= 1``."""
        return cls((1,) + (0,) * (d - 1) + (-1,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        return poly_add(self, other)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return poly_add(self, -other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        return poly_mul(self, other)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "t" if i == 1 else f"t^{i}"
                body = mono if mag == 1 else f"{mag}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def as_poly(p) -> IntPolynomial:
    return p if isinstance(p, IntPolynomial) else IntPolynomial(tuple(p))


def poly_add(a, b) -> IntPolynomial:
    a, b = as_poly(a).coeffs, as_poly(b).coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return IntPolynomial(tuple(out))


def poly_mul(a, b) -> IntPolynomial:
    """Exact product of two integer polynomials."""
    a, b = as_poly(a).coeffs, as_poly(b).coeffs
    if not a or not b:
        return IntPolynomial()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return IntPolynomial(tuple(out))


def poly_prod(factors: Iterable) -> IntPolynomial:
    acc = IntPolynomial((1,))
    for f in factors:
        acc = poly_mul(acc, f)
    return acc


def poly_div_exact(num, den) -> IntPolynomial:
    """
    Divide ``num`` by ``den`` when the quotient is known to be a polynomial.

    Division runs low-order first, pivoting on the lowest nonzero
    coefficient of ``den`` (the constant term for every denominator built
    from ``1 - t**d`` factors).  Any nonzero leftover coefficient, or a
    pivot step that does not divide evenly, raises :class:`NonExactDivision`
    naming the first offending power of ``t``.
    """
    num, den = as_poly(num), as_poly(den)
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if num.is_zero():
        return IntPolynomial()

    shift = next(i for i, c in enumerate(den.coeffs) if c)
    d = den.coeffs[shift:]
    lead_zeros = next(i for i, c in enumerate(num.coeffs) if c)
    if lead_zeros < shift:
        raise NonExactDivision(lead_zeros, num.coeffs[lead_zeros])
    rem = list(num.coeffs[shift:])
    for i in range(shift):
        if num.coeffs[i]:
            raise NonExactDivision(i, num.coeffs[i])

    qlen = len(rem) - len(d) + 1
    pivot = d[0]
    quot = [0] * max(qlen, 0)
    for i in range(max(qlen, 0)):
        r = rem[i]
        if r == 0:
            continue
        q, leftover = divmod(r, pivot)
        if leftover:
            raise NonExactDivision(i + shift, r)
        quot[i] = q
        for j, c in enumerate(d):
            rem[i + j] -= q * c
    for i in range(max(qlen, 0), len(rem)):
        if rem[i]:
            raise NonExactDivision(i + shift, rem[i])
    return IntPolynomial(tuple(quot))


def series_inverse_trunc(p, order: int) -> list[int]:
    """
    First ``order + 1`` coefficients of the power series ``1 / p(t)``.

    ``p`` must have constant term +1 or -1, so every coefficient of the
    inverse is an integer.
    """
    p = as_poly(p)
    if order < 0:
        raise ValueError("order must be nonnegative")
    c0 = p[0]
    if c0 not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {c0} is not a unit")
    out = [0] * (order + 1)
    out[0] = c0
    pc = p.coeffs
    for k in range(1, order + 1):
        acc = 0
        for j in range(1, min(k, len(pc) - 1) + 1):
            acc += pc[j] * out[k - j]
        out[k] = -acc * c0
    return out


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True, eq=False)
class PeriodicRational:
    """
    An exact rational sequence on the integers with ``f(s) = values[s % period]``.
    """

    period: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.period < 1:
            raise ValueError("period must be positive")
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != self.period:
            raise ValueError(f"expected {self.period} values, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def constant(cls, c) -> PeriodicRational:
        return cls(1, (Fraction(c),))

    @classmethod
    def from_function(cls, period: int, f: Callable[[int], Fraction]) -> PeriodicRational:
        return cls(period, tuple(f(s) for s in range(period)))

    @classmethod
    def cos_turns(cls, num: int, den: int) -> PeriodicRational:
        """The sequence ``cos(2*pi*num*s/den)``; must be rational at every ``s``."""
        return cls.from_function(den, lambda s: rational_cos_turn(Fraction(num * s, den)))

    @classmethod
    def sin_turns(cls, num: int, den: int) -> PeriodicRational:
        """The sequence ``sin(2*pi*num*s/den)``; must be rational at every ``s``."""
        return cls.from_function(
            den, lambda s: rational_cos_turn(Fraction(num * s, den) - Fraction(1, 4))
        )

    def __call__(self, s: int) -> Fraction:
        return self.values[s % self.period]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PeriodicRational):
            return NotImplemented
        L = _lcm(self.period, other.period)
        return all(self(s) == other(s) for s in range(L))

    def __hash__(self):
        m = self.minimal()
        return hash(m.values)

    def _combine(self, other, op) -> PeriodicRational:
        if not isinstance(other, PeriodicRational):
            other = PeriodicRational.constant(other)
        L = _lcm(self.period, other.period)
        return PeriodicRational(L, tuple(op(self(s), other(s)) for s in range(L))).minimal()

    def __add__(self, other):
        return self._combine(other, lambda x, y: x + y)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, lambda x, y: x - y)

    def __mul__(self, other):
        return self._combine(other, lambda x, y: x * y)

    __rmul__ = __mul__

    def __neg__(self):
        return PeriodicRational(self.period, tuple(-v for v in self.values))

    def mean(self) -> Fraction:
        """Average over one period: the constant part of the sequence."""
        return sum(self.values, Fraction(0)) / self.period

    def minimal(self) -> PeriodicRational:
        """The same sequence stored over its smallest period."""
        for p in range(1, self.period + 1):
            if self.period % p:
                continue
            if all(self.values[i] == self.values[i % p] for i in range(self.period)):
                return PeriodicRational(p, self.values[:p])
        return self

    def __repr__(self) -> str:
        vals = ", ".join(str(v) for v in self.values)
        return f"PeriodicRational({self.period}, [{vals}])"


def rational_cos_turn(turns: Fraction) -> Fraction:
    """
    ``cos(2*pi*turns)`` for rational ``turns`` when that value is rational.

    By Niven's theorem this happens only when the reduced denominator of
    ``turns`` is 1, 2, 3, 4 or 6; anything else raises ``ValueError``.
    """
    x = Fraction(turns) % 1
    table = {
        Fraction(0): Fraction(1),
        Fraction(1, 6): Fraction(1, 2),
        Fraction(1, 4): Fraction(0),
        Fraction(1, 3): Fraction(-1, 2),
        Fraction(1, 2): Fraction(-1),
        Fraction(2, 3): Fraction(-1, 2),
        Fraction(3, 4): Fraction(0),
        Fraction(5, 6): Fraction(1, 2),
    }
    try:
        return table[x]
    except KeyError:
        raise ValueError(f"cos(2*pi*{x}) is irrational") from None


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve a square linear system over the rationals by Gauss-Jordan elimination."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n] for row in a]
