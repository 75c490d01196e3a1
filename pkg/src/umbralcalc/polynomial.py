"""Dense univariate polynomials over exact rationals.

A polynomial is stored as a tuple of ``Fraction`` coefficients, index i
holding the coefficient of x**i.  Trailing zeros are stripped on
construction, so the zero polynomial is the empty tuple and two equal
polynomials always compare equal structurally.  ``degree`` is ``None``
for the zero polynomial rather than a sentinel integer.

Rationals cross textual boundaries as exact "p/q" strings (an optional
leading "-", an integer, and an optional "/denominator").  Decimal
notation is rejected on purpose: the engine promises exactness.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]

_RATIONAL_PATTERN = re.compile(r"-?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational "p/q" string, rejecting anything else."""
    cleaned = text.strip()
    if not _RATIONAL_PATTERN.fullmatch(cleaned):
        raise ValueError(f"not an exact rational (expected p or p/q): {text!r}")
    return Fraction(cleaned)


def format_rational(value: Scalar) -> str:
    """Render an exact rational as "p" or "p/q"."""
    return str(Fraction(value))


class Polynomial:
    """Immutable dense polynomial in x with Fraction coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls((Fraction(value),))

    @classmethod
    def x_power(cls, n: int) -> "Polynomial":
        """The monomial x**n."""
        if n < 0:
            raise ValueError("monomial power must be nonnegative")
        return cls((0,) * n + (1,))

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> Union[int, None]:
        """Degree of the polynomial, or None for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of x**i (zero outside the stored range)."""
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self._coeffs))

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, Polynomial):
            if not self._coeffs or not other._coeffs:
                return Polynomial()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if not a:
                    continue
                for j, b in enumerate(other._coeffs):
                    if b:
                        out[i + j] += a * b
            return Polynomial(out)
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial()
            return Polynomial(tuple(c * other for c in self._coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial power must be a nonnegative integer")
        result = Polynomial.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x0: Scalar) -> Fraction:
        return self.evaluate(x0)

    def evaluate(self, x0: Scalar) -> Fraction:
        """Exact value at x0 via the Horner scheme."""
        x0 = Fraction(x0)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x0 + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple((i + 1) * c for i, c in enumerate(self._coeffs[1:], 0)))

    def antiderivative(self) -> "Polynomial":
        """The antiderivative with zero constant term (x**n -> x**(n+1)/(n+1))."""
        out = [Fraction(0)]
        out.extend(c / (i + 1) for i, c in enumerate(self._coeffs))
        return Polynomial(out)

    def definite_integral(self, lo: Scalar, hi: Scalar) -> Fraction:
        anti = self.antiderivative()
        return anti.evaluate(hi) - anti.evaluate(lo)

    def shifted(self, offset: Scalar) -> "Polynomial":
        """The polynomial p(x + offset), expanded exactly."""
        offset = Fraction(offset)
        if not offset or not self._coeffs:
            return self
        d = len(self._coeffs) - 1
        powers = [Fraction(1)]
        for _ in range(d):
            powers.append(powers[-1] * offset)
        out = [Fraction(0)] * (d + 1)
        # new_j = sum_n p_n * C(n, j) * offset**(n-j), Pascal row built in place
        for n, c in enumerate(self._coeffs):
            if not c:
                continue
            binom = 1
            for j in range(n + 1):
                out[j] += c * binom * powers[n - j]
                binom = binom * (n - j) // (j + 1)
        return Polynomial(out)

    def scaled(self, factor: Scalar) -> "Polynomial":
        """The polynomial p(factor * x): coefficient i picks up factor**i."""
        factor = Fraction(factor)
        out = []
        power = Fraction(1)
        for i, c in enumerate(self._coeffs):
            if i:
                power *= factor
            out.append(c * power)
        return Polynomial(out)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self._coeffs!r})"


#: The polynomial x, handy for building expressions in tests and scripts.
X = Polynomial((0, 1))

ZERO = Polynomial()
ONE = Polynomial.constant(1)
