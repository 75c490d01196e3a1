"""Exact combinatorial kernels.

Factorials, binomials, multinomials, falling factorials, Stirling numbers
of both kinds (built by the triangle recurrences and memoized row by row),
and the enumeration of composition tuples used by the argument-scaling
formula.  Everything returns exact integers or Fractions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence, Union

from .errors import IndexOutOfTriangle
from .polynomial import Polynomial

Scalar = Union[int, Fraction]


def factorial(n: int) -> int:
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k) with the usual zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("binomial needs a nonnegative upper index")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(parts: Sequence[int]) -> int:
    """(sum parts)! / prod(part!)."""
    if any(p < 0 for p in parts):
        raise ValueError("multinomial parts must be nonnegative")
    total = sum(parts)
    out = math.factorial(total)
    for p in parts:
        out //= math.factorial(p)
    return out


def falling_factorial(x, count: int):
    """(x)_count = x (x-1) ... (x-count+1), with (x)_0 = 1.

    Accepts an exact scalar (returns a Fraction) or a Polynomial (returns
    the expanded product, e.g. the symbolic (x)_3 = x^3 - 3x^2 + 2x).
    """
    if count < 0:
        raise ValueError("falling factorial length must be nonnegative")
    if isinstance(x, Polynomial):
        out = Polynomial.constant(1)
        for i in range(count):
            out = out * (x - Polynomial.constant(i))
        return out
    x = Fraction(x)
    out = Fraction(1)
    for i in range(count):
        out *= x - i
    return out


def rising_product(start: Scalar, count: int) -> Fraction:
    """(start+1)(start+2)...(start+count), the index products in ladder identities."""
    out = Fraction(1)
    for j in range(1, count + 1):
        out *= Fraction(start) + j
    return out


@lru_cache(maxsize=None)
def _stirling_second_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling_second_row(n - 1)
    row = [0] * (n + 1)
    for m in range(n + 1):
        acc = 0
        if m <= n - 1:
            acc += m * prev[m]
        if 0 <= m - 1 <= n - 1:
            acc += prev[m - 1]
        row[m] = acc
    return tuple(row)


@lru_cache(maxsize=None)
def _stirling_first_row(n: int) -> tuple[int, ...]:
    # signed convention: sum_m s(n,m) x^m = (x)_n
    if n == 0:
        return (1,)
    prev = _stirling_first_row(n - 1)
    row = [0] * (n + 1)
    for m in range(n + 1):
        acc = 0
        if m <= n - 1:
            acc -= (n - 1) * prev[m]
        if 0 <= m - 1 <= n - 1:
            acc += prev[m - 1]
        row[m] = acc
    return tuple(row)


def stirling_second(n: int, l: int) -> int:
    """Stirling number of the second kind S(n, l)."""
    if n < 0 or l < 0 or l > n:
        raise IndexOutOfTriangle(f"S({n}, {l}) is outside the triangle")
    return _stirling_second_row(n)[l]


def stirling_first_signed(n: int, m: int) -> int:
    """Signed Stirling number of the first kind s(n, m)."""
    if n < 0 or m < 0 or m > n:
        raise IndexOutOfTriangle(f"s({n}, {m}) is outside the triangle")
    return _stirling_first_row(n)[m]


def stirling_second_extended(n: int, l: int) -> int:
    """S(n, l) extended by zero for l > n (sums over Stirling triangles)."""
    if n < 0 or l < 0:
        raise IndexOutOfTriangle(f"S({n}, {l}) has a negative index")
    if l > n:
        return 0
    return _stirling_second_row(n)[l]


class StirlingTable:
    """A frozen triangle of Stirling numbers up to n_max, either kind."""

    __slots__ = ("kind", "n_max", "_rows")

    def __init__(self, kind: str, n_max: int):
        if kind not in ("first-signed", "second"):
            raise ValueError("kind must be 'first-signed' or 'second'")
        if n_max < 0:
            raise ValueError("n_max must be nonnegative")
        self.kind = kind
        self.n_max = n_max
        build = _stirling_first_row if kind == "first-signed" else _stirling_second_row
        self._rows = tuple(build(n) for n in range(n_max + 1))

    def value(self, n: int, m: int) -> int:
        if not (0 <= n <= self.n_max) or not (0 <= m <= n):
            raise IndexOutOfTriangle(f"({n}, {m}) outside triangle of size {self.n_max}")
        return self._rows[n][m]

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows


class Composition(NamedTuple):
    """One way of writing a total as ordered nonnegative parts.

    ``weight`` is sum(i * parts[i]) and ``multiplicity`` the multinomial
    coefficient total!/prod(parts[i]!), the two quantities the
    argument-scaling formula attaches to each tuple.
    """

    parts: tuple[int, ...]
    weight: int
    multiplicity: int


def enumerate_compositions(total: int, parts_count: int) -> list[Composition]:
    """All tuples of `parts_count` nonnegative integers summing to `total`."""
    if total < 0:
        raise ValueError("total must be nonnegative")
    if parts_count < 1:
        raise ValueError("need at least one part")
    out: list[Composition] = []

    def go(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 1:
            parts = tuple(prefix + [remaining])
            weight = sum(i * u for i, u in enumerate(parts))
            out.append(Composition(parts, weight, multinomial(parts)))
            return
        for u in range(remaining, -1, -1):
            go(prefix + [u], remaining - u, slots - 1)

    go([], total, parts_count)
    return out
