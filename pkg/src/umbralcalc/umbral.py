"""Series acting on polynomials: functionals, operators, Appell and Sheffer sequences.

A truncated series f plays two roles here.  As a linear functional it
pairs with a polynomial through ``functional_apply``, which weights the
x**n coefficient by n! times the t**n coefficient of f.  As an operator
it acts through ``operator_apply``, where t itself acts as d/dx, so a
series acts as the corresponding constant-coefficient differential
operator.  The adjoint law <f*g | p> = <f | g p> ties the two together
and is property-tested rather than assumed.

Two distinct realizations of "divide by t" exist on purpose:

* ``Polynomial.antiderivative`` maps x**n to x**(n+1)/(n+1) monomial-wise;
* ``sheffer_shift_up`` returns s_{n+1}/(n+1), the element the
  orthogonality conditions assign to the raised index.

Applied to a sequence element these differ by a constant (for the
Bernoulli-style sequence already at n = 0), so conflating them silently
produces wrong constants; the identity suite pins down their exact gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import (
    IndexOutOfRange,
    InsufficientPrecision,
    NotDeltaSeries,
    NotInvertible,
    ZeroScale,
)
from .polynomial import Polynomial, X
from .series import TruncatedSeries

Scalar = Union[int, Fraction]


def _require_precision(f: TruncatedSeries, p: Polynomial, what: str) -> None:
    d = p.degree
    if d is not None and f.precision < d:
        raise InsufficientPrecision(
            f"{what} needs series precision >= {d}, got {f.precision}"
        )


def functional_apply(f: TruncatedSeries, p: Polynomial) -> Fraction:
    """The pairing <f | p> = sum_n p_n * n! * [t^n] f."""
    _require_precision(f, p, "functional application")
    acc = Fraction(0)
    fact = 1
    for n, c in enumerate(p.coefficients):
        if n:
            fact *= n
        if c:
            acc += c * fact * f.coefficient(n)
    return acc


def operator_apply(f: TruncatedSeries, p: Polynomial) -> Polynomial:
    """f(t) acting on p(x), with t acting as d/dx; degree never increases."""
    _require_precision(f, p, "operator application")
    result = Polynomial()
    current = p
    k = 0
    while not current.is_zero:
        c = f.coefficient(k)
        if c:
            result = result + current * c
        current = current.derivative()
        k += 1
    return result


@dataclass(frozen=True)
class ShefferPair:
    """An invertible series g and a delta series f, validated on construction."""

    g: TruncatedSeries
    f: TruncatedSeries

    def __post_init__(self) -> None:
        if self.g.valuation != 0:
            raise NotInvertible("g of a Sheffer pair must have a nonzero constant term")
        if self.f.valuation != 1:
            raise NotDeltaSeries("f of a Sheffer pair must have valuation exactly 1")


@dataclass(frozen=True)
class ShefferSequence:
    """The polynomials s_0..s_n_max determined by a Sheffer pair."""

    pair: ShefferPair
    polys: tuple[Polynomial, ...]

    @property
    def n_max(self) -> int:
        return len(self.polys) - 1


def first_orthogonality_failure(
    pair: ShefferPair, polys: tuple[Polynomial, ...]
) -> Union[tuple[int, int, Fraction], None]:
    """First (n, k, value) where <g f^k | s_n> != n! * delta_{n,k}, else None."""
    n_max = len(polys) - 1
    weight = pair.g
    for k in range(n_max + 1):
        for n in range(n_max + 1):
            value = functional_apply(weight, polys[n])
            expected = math.factorial(n) if n == k else 0
            if value != expected:
                return (n, k, value)
        if k < n_max:
            weight = weight * pair.f
    return None


def _checked_sequence(pair: ShefferPair, polys: list[Polynomial]) -> ShefferSequence:
    seq = ShefferSequence(pair, tuple(polys))
    failure = first_orthogonality_failure(pair, seq.polys)
    if failure is not None:
        raise ArithmeticError(
            f"constructed sequence violates orthogonality at (n, k) = {failure[:2]}"
        )
    return seq


def appell_sequence(g: TruncatedSeries, n_max: int) -> ShefferSequence:
    """The Appell sequence for g: s_n = g(t)^(-1) applied to x^n."""
    if g.precision < n_max:
        raise InsufficientPrecision(
            f"need precision >= {n_max} to build an Appell sequence, got {g.precision}"
        )
    g_inv = g.invert()
    pair = ShefferPair(g, TruncatedSeries.t_power(1, g.precision))
    polys = [operator_apply(g_inv, Polynomial.x_power(n)) for n in range(n_max + 1)]
    return _checked_sequence(pair, polys)


def sheffer_sequence(pair: ShefferPair, n_max: int) -> ShefferSequence:
    """The Sheffer sequence for (g, f), built from the conjugate generating series.

    With fbar the compositional inverse of f, the generating identity
    sum_k s_k(x) t^k / k! = (1 / g(fbar(t))) * e^{x fbar(t)} yields
    s_n = sum_i n! [t^n](A * fbar^i / i!) x^i with A = 1/g(fbar).
    Orthogonality against the pair is then checked, not assumed.
    """
    if min(pair.g.precision, pair.f.precision) < n_max:
        raise InsufficientPrecision(
            f"need precision >= {n_max} to build a Sheffer sequence"
        )
    fbar = pair.f.revert()
    amplitude = pair.g.compose(fbar).invert()
    polys: list[Polynomial] = []
    term = amplitude  # A * fbar^i / i!
    columns: list[TruncatedSeries] = [term]
    for i in range(1, n_max + 1):
        term = term * fbar * Fraction(1, i)
        columns.append(term)
    fact = 1
    for n in range(n_max + 1):
        if n:
            fact *= n
        coeffs = [fact * columns[i].coefficient(n) for i in range(n + 1)]
        polys.append(Polynomial(coeffs))
    return _checked_sequence(pair, polys)


def appell_recurrence_step(g: TruncatedSeries, s_n: Polynomial) -> Polynomial:
    """One step of the Appell recurrence: s_{n+1} = (x - g'(t)/g(t)) s_n."""
    ratio = g.derivative() * g.invert()
    _require_precision(ratio, s_n, "the recurrence step")
    return X * s_n - operator_apply(ratio, s_n)


def appell_multiplication(
    g: TruncatedSeries, s_n: Polynomial, n: int, scale: Scalar
) -> Polynomial:
    """s_n(scale * x) computed through the operator form scale^n g(t)/g(t/scale)."""
    scale = Fraction(scale)
    if not scale:
        raise ZeroScale("argument scaling needs a nonzero factor")
    if g.valuation != 0:
        raise NotInvertible("argument scaling needs an invertible g")
    op = g * g.scale_argument(1 / scale).invert()
    return scale**n * operator_apply(op, s_n)


def sheffer_shift_up(seq: ShefferSequence, n: int) -> Polynomial:
    """The element s_{n+1}/(n+1) that orthogonality assigns to the raised index."""
    if not (0 <= n < seq.n_max):
        raise IndexOutOfRange(
            f"shift-up from index {n} needs s_{n + 1}, sequence stops at {seq.n_max}"
        )
    return seq.polys[n + 1] * Fraction(1, n + 1)
