"""
Ground-truth counting by dynamic programming and direct enumeration.

``W(s, d)`` counts nonnegative solutions of ``d_1 x_1 + ... + d_m x_m = s``.
``W_m(s)`` is the special case ``d = (1, ..., m)``, i.e. partitions of ``s``
into parts no larger than ``m``.  ``P_n^m(s)`` additionally bounds the number
of parts by ``n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm, prod
from typing import Iterator, Sequence


@dataclass(frozen=True)
class DenomTuple:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(d) for d in self.parts)
        if not parts:
            raise ValueError("a denominator tuple needs at least one part")
        if any(d < 1 for d in parts):
            raise ValueError(f"parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def consecutive(cls, m: int) -> DenomTuple:
        return cls(tuple(range(1, m + 1)))

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def pi(self) -> int:
        """Product of the parts."""
        return prod(self.parts)

    @property
    def lcm(self) -> int:
        return lcm(*self.parts)


def _as_denoms(d) -> DenomTuple:
    return d if isinstance(d, DenomTuple) else DenomTuple(tuple(d))


def unconstrained_table(s_max: int, d) -> list[int]:
    """``[W(0, d), ..., W(s_max, d)]`` by the coin-change recurrence."""
    d = _as_denoms(d)
    table = [1] + [0] * s_max
    for part in d.parts:
        for s in range(part, s_max + 1):
            table[s] += table[s - part]
    return table


def count_unconstrained(s: int, d) -> int:
    if s < 0:
        return 0
    return unconstrained_table(s, d)[s]


@lru_cache(maxsize=None)
def _consecutive_cached(m: int, s_max: int) -> tuple[int, ...]:
    return tuple(unconstrained_table(s_max, range(1, m + 1)))


def consecutive_table(m: int, s_max: int) -> tuple[int, ...]:
    """``(W_m(0), ..., W_m(s_max))``; cached, since every route reuses these."""
    if m < 1:
        raise ValueError("m must be positive")
    # Round the cache key up so nearby requests share one table.
    size = max(64, 1 << max(s_max, 1).bit_length())
    return _consecutive_cached(m, size)[: s_max + 1]


def count_consecutive(s: int, m: int) -> int:
    """``W_m(s)``: partitions of ``s`` into parts at most ``m``."""
    if s < 0:
        return 0
    return consecutive_table(m, s)[s]


def count_partitions(s: int) -> int:
    """Unrestricted partition number, taken as ``W_s(s)``."""
    if s < 0:
        return 0
    return count_consecutive(s, max(s, 1))


def constrained_table(n: int, m: int, s_max: int | None = None) -> list[int]:
    """
    ``[P_n^m(0), ..., P_n^m(s_max)]``.

    ``ways[k][a]`` counts multisets of ``k`` parts from ``1..m`` summing to
    ``a``.  Parts are added one size at a time; sweeping ``k`` upward lets a
    size be reused.  Cost is O(m * n * s_max).
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    if s_max is None:
        s_max = n * m
    ways = [[0] * (s_max + 1) for _ in range(n + 1)]
    ways[0][0] = 1
    for part in range(1, m + 1):
        for k in range(1, n + 1):
            prev, cur = ways[k - 1], ways[k]
            for a in range(part, s_max + 1):
                cur[a] += prev[a - part]
    return [sum(ways[k][a] for k in range(n + 1)) for a in range(s_max + 1)]


def _enumerate_constrained(s: int, n: int, m: int) -> int:
    count = 0

    def walk(r: int, remaining: int, parts_left: int):
        nonlocal count
        if remaining == 0:
            count += 1
            return
        if r == 0:
            return
        for x in range(min(remaining // r, parts_left) + 1):
            walk(r - 1, remaining - r * x, parts_left - x)

    walk(m, s, n)
    return count


def count_constrained(s: int, n: int, m: int, method: str = "dp") -> int:
    """
    ``P_n^m(s)``: solutions of ``sum r x_r = s`` over ``r = 1..m`` with
    ``sum x_r <= n``.

    ``method="enumerate"`` walks every solution vector instead; it is only
    meant as a cross-check of the DP for small ``s``.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    if s < 0 or s > n * m:
        return 0
    if method == "dp":
        return constrained_table(n, m, s)[s]
    if method == "enumerate":
        return _enumerate_constrained(s, n, m)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class PartitionList:
    r: int
    partitions: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.partitions)

    def __iter__(self):
        return iter(self.partitions)

    def __getitem__(self, i):
        return self.partitions[i]

    def exponent_vectors(self) -> list[tuple[int, ...]]:
        """Multiplicity vectors ``(q_1, ..., q_r)``; ``q_k`` counts parts equal to ``k``."""
        return [multiplicities(p, self.r) for p in self.partitions]


def multiplicities(partition: Sequence[int], r: int) -> tuple[int, ...]:
    q = [0] * r
    for part in partition:
        q[part - 1] += 1
    return tuple(q)


def iter_partitions(r: int) -> Iterator[tuple[int, ...]]:
    """
    Partitions of ``r`` as weakly decreasing tuples, in reverse
    lexicographic order: ``(r,)`` first, all ones last.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    if r == 0:
        yield ()
        return
    # Multiplicity form of the current partition: parts[i] repeated mult[i] times.
    parts, mult = [r], [1]
    while True:
        yield tuple(p for p, k in zip(parts, mult) for _ in range(k))
        # Step to the next partition: break one copy of the smallest part
        # greater than 1 and refill greedily with the next smaller size.
        rest = 0
        if parts[-1] == 1:
            rest = mult.pop()
            parts.pop()
        if not parts:
            return
        big = parts[-1]
        mult[-1] -= 1
        if mult[-1] == 0:
            parts.pop()
            mult.pop()
        rest += big
        size = big - 1
        q, rem = divmod(rest, size)
        parts.append(size)
        mult.append(q)
        if rem:
            parts.append(rem)
            mult.append(1)


def enumerate_partitions(r: int) -> PartitionList:
    return PartitionList(r, tuple(iter_partitions(r)))
