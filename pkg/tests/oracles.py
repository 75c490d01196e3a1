"""Independent oracles for the test suite.

Everything here is computed by definitions and recurrences that do not
touch the engine's series machinery: number recurrences, explicit sums
and a local long division.  Expected values in the tests come from these
(or from hand arithmetic frozen in place), never from the code paths
they check.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from umbralcalc.polynomial import Polynomial


def bernoulli_numbers(n_max: int) -> list[Fraction]:
    """b_0..b_n_max from sum_{i<=n} C(n+1, i) b_i = 0 (b_0 = 1)."""
    numbers = [Fraction(1)]
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for i in range(n):
            acc += comb(n + 1, i) * numbers[i]
        numbers.append(-acc / (n + 1))
    return numbers


def bernoulli_polynomials(n_max: int) -> list[Polynomial]:
    numbers = bernoulli_numbers(n_max)
    polys = []
    for n in range(n_max + 1):
        polys.append(Polynomial([comb(n, i) * numbers[n - i] for i in range(n + 1)]))
    return polys


def euler_polynomials(n_max: int) -> list[Polynomial]:
    """E_n(x) = x^n - (1/2) sum_{i<n} C(n, i) E_i(x), from the two-point mean."""
    polys: list[Polynomial] = []
    for n in range(n_max + 1):
        acc = Polynomial.x_power(n)
        for i in range(n):
            acc = acc - polys[i] * Fraction(comb(n, i), 2)
        polys.append(acc)
    return polys


def genocchi_numbers(n_max: int) -> list[Fraction]:
    """g_n = 2 (1 - 2^n) b_n, with b_1 = -1/2."""
    bern = bernoulli_numbers(n_max)
    return [2 * (1 - Fraction(2) ** n) * bern[n] for n in range(n_max + 1)]


def genocchi_polynomials(n_max: int) -> list[Polynomial]:
    numbers = genocchi_numbers(n_max)
    polys = []
    for n in range(n_max + 1):
        polys.append(Polynomial([comb(n, i) * numbers[n - i] for i in range(n + 1)]))
    return polys


def genocchi_numbers_by_division(n_max: int) -> list[Fraction]:
    """g_n from long division of 2t by (e^t + 1), written out locally."""
    precision = n_max + 2
    denom = [Fraction(2)] + [Fraction(1, factorial(k)) for k in range(1, precision + 1)]
    numer = [Fraction(0), Fraction(2)] + [Fraction(0)] * (precision - 1)
    quotient = []
    for n in range(precision + 1):
        acc = numer[n]
        for i in range(n):
            acc -= quotient[i] * denom[n - i]
        quotient.append(acc / denom[0])
    return [factorial(n) * quotient[n] for n in range(n_max + 1)]


def stirling2_by_sum(n: int, l: int) -> Fraction:
    """S(n, l) = (1/l!) sum_i (-1)^(l-i) C(l, i) i^n."""
    acc = Fraction(0)
    for i in range(l + 1):
        acc += (-1) ** (l - i) * comb(l, i) * Fraction(i) ** n
    return acc / factorial(l)


def falling_factorial_by_product(count: int) -> Polynomial:
    """(x)_count expanded by repeated polynomial multiplication."""
    out = Polynomial.constant(1)
    for i in range(count):
        out = out * Polynomial([-i, 1])
    return out
