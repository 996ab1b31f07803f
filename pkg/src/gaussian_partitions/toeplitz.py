"""
Unit-diagonal lower-triangular Toeplitz systems

    P(g) = T(g) + sum_{s<g} P(s) U(g - s),    P(0) = T(0) = 1,

solved by forward substitution and by the closed form

    P(g) = sum_{r<g} [T(g - r) + U(g - r)] Phi_r(U),

where ``Phi_r(U)`` sums ``q!/(q_1! ... q_r!) * prod U(k)**q_k`` over the
partitions of ``r`` with multiplicities ``q_k`` and ``q`` parts.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Callable, Sequence

from .exact import IntPolynomial
from .gaussian import GaussianTable
from .partitions import consecutive_table, iter_partitions, multiplicities

Accessor = Callable[[int], int]


@dataclass(frozen=True)
class ConvolutionSystem:
    T: Accessor
    U: Accessor

    def __post_init__(self):
        if self.T(0) != 1:
            raise ValueError(f"T(0) must be 1, got {self.T(0)}")

    @classmethod
    def from_sequences(cls, T: Sequence[int], U: Sequence[int]) -> ConvolutionSystem:
        """Finite sequences, extended by zero."""
        T, U = tuple(T), tuple(U)
        return cls(
            lambda g: T[g] if 0 <= g < len(T) else 0,
            lambda g: U[g] if 0 <= g < len(U) else 0,
        )


@lru_cache(maxsize=None)
def _gaussian_rhs(n: int, m: int, g_max: int) -> tuple[int, ...]:
    wn, wm = consecutive_table(n, g_max), consecutive_table(m, g_max)
    return tuple(sum(wn[s] * wm[g - s] for s in range(g + 1)) for g in range(g_max + 1))


def gaussian_system(n: int, m: int, g_max: int) -> ConvolutionSystem:
    """``T = W_n * W_m`` (convolution) and ``U = -W_{n+m}``, tabulated to ``g_max``."""
    T = _gaussian_rhs(n, m, g_max)
    W = consecutive_table(n + m, g_max)
    return ConvolutionSystem.from_sequences(T, [-w for w in W])


def solve_forward(sys: ConvolutionSystem, g_max: int) -> list[int]:
    P = [1]
    U = [sys.U(k) for k in range(g_max + 1)]
    for g in range(1, g_max + 1):
        P.append(sys.T(g) + sum(P[s] * U[g - s] for s in range(g)))
    return P


@dataclass(frozen=True)
class PhiPolynomial:
    r: int
    terms: tuple[tuple[int, tuple[int, ...]], ...]

    def __str__(self) -> str:
        return format_phi(self)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient_sum(self) -> int:
        return sum(c for c, _ in self.terms)


def multinomial(q: Sequence[int]) -> int:
    return factorial(sum(q)) // prod(factorial(k) for k in q)


@lru_cache(maxsize=64)
def build_phi(r: int) -> PhiPolynomial:
    """One term per partition of ``r``, in reverse lexicographic partition order."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    terms = []
    for part in iter_partitions(r):
        q = multiplicities(part, r)
        terms.append((multinomial(q), q))
    return PhiPolynomial(r, tuple(terms))


def format_phi(phi: PhiPolynomial, symbol: str = "U") -> str:
    """Render as e.g. ``U(3) + 2U(2)U(1) + U(1)^3``, largest index first within a term."""
    if phi.r == 0:
        return "1"
    out = []
    for coef, q in phi.terms:
        factors = []
        for k in range(len(q), 0, -1):
            if q[k - 1]:
                factors.append(f"{symbol}({k})" + (f"^{q[k - 1]}" if q[k - 1] > 1 else ""))
        out.append(("" if coef == 1 else str(coef)) + "".join(factors))
    return " + ".join(out)


def eval_phi(phi: PhiPolynomial, U: Accessor) -> int:
    """Term-by-term evaluation of ``phi`` at ``U(1), ..., U(r)``."""
    u = [U(k) for k in range(1, phi.r + 1)]
    total = 0
    for coef, q in phi.terms:
        term = coef
        for k, qk in enumerate(q):
            if qk:
                term *= u[k] ** qk
        total += term
    return total


def phi_values(U: Accessor, r_max: int) -> list[int]:
    """
    ``[Phi_0(U), ..., Phi_{r_max}(U)]`` without listing partitions.

    Same sum as :func:`eval_phi`, grouped by multiplicity: part sizes are
    added one at a time, and ``acc[s][q]`` holds the partial sum over
    multiplicity choices with total ``s`` and ``q`` parts, already weighted by
    the multinomial.  Adding ``j`` copies of size ``k`` multiplies by
    ``C(q + j, j) * U(k)**j``.  Cost is about ``r_max**3 log r_max`` instead
    of the partition count.
    """
    acc = [[0] * (r_max + 1) for _ in range(r_max + 1)]
    acc[0][0] = 1
    for k in range(1, r_max + 1):
        uk = U(k)
        if uk == 0:
            continue
        new = [row[:] for row in acc]
        for s in range(r_max + 1 - k):
            row = acc[s]
            for q in range(s + 1):
                base = row[q]
                if not base:
                    continue
                power = 1
                for j in range(1, (r_max - s) // k + 1):
                    power *= uk
                    new[s + k * j][q + j] += base * comb(q + j, j) * power
        acc = new
    return [sum(row) for row in acc]


@lru_cache(maxsize=None)
def _gaussian_phi(N: int, r_max: int) -> tuple[int, ...]:
    W = consecutive_table(N, r_max)
    return tuple(phi_values(lambda k: -W[k], r_max))


def gaussian_phi(N: int, r_max: int) -> tuple[int, ...]:
    """``Phi_r`` at ``U(k) = -W_N(k)`` for ``r <= r_max``, cached per ``N``."""
    size = max(32, 1 << max(r_max, 1).bit_length())
    return _gaussian_phi(N, size)[: r_max + 1]


def solve_closed_form(sys: ConvolutionSystem, g: int, phis: Sequence[int] | None = None) -> int:
    """
    ``P(g)`` from the closed form.  ``phis`` may supply precomputed
    ``Phi_r(U)`` values for ``r < g``; otherwise they are computed here.
    """
    if g < 0:
        raise ValueError("g must be nonnegative")
    if g == 0:
        return 1
    if phis is None:
        phis = phi_values(sys.U, g - 1)
    return sum((sys.T(g - r) + sys.U(g - r)) * phis[r] for r in range(g))


def toeplitz_sequence(n: int, m: int, g_max: int) -> list[int]:
    """``P_n^m(0..g_max)`` by the closed form with ``T``, ``U`` from unconstrained counts."""
    sys = gaussian_system(n, m, g_max)
    phis = gaussian_phi(n + m, g_max)
    return [solve_closed_form(sys, g, phis) for g in range(g_max + 1)]


def pnm_by_toeplitz(n: int, m: int, g_max: int | None = None) -> GaussianTable:
    """
    Gaussian table from the closed form.  Entries past ``n*m`` are kept, so
    any failure to cancel shows up as excess degree.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    if g_max is None:
        g_max = n * m
    return GaussianTable(n, m, IntPolynomial(tuple(toeplitz_sequence(n, m, g_max))), "toeplitz")
