"""Truncated formal power series in t over exact rationals.

A series stores plain coefficients of t**k for k = 0..precision (the
truncation order, inclusive), so the stored tuple always has
``precision + 1`` entries, trailing zeros included.  Coefficients are
*not* divided by k!; the exponential-weight convention used by the
umbral layer is applied at that boundary.

Precision is explicit and only ever shrinks: a binary operation returns
the smaller operand precision, division by a series of valuation w costs
w orders, and the t-derivative costs one.  No operation fabricates
high-order terms it cannot know.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import (
    CompositionRequiresDelta,
    InsufficientPrecision,
    NotDeltaSeries,
    NotInvertible,
    ValuationMismatch,
)

Scalar = Union[int, Fraction]


class TruncatedSeries:
    """Immutable truncated power series with explicit precision."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], precision: Union[int, None] = None):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        if precision is None:
            if not cs:
                raise ValueError("series needs coefficients or an explicit precision")
            precision = len(cs) - 1
        if precision < 0:
            raise ValueError("precision must be nonnegative")
        if len(cs) < precision + 1:
            cs.extend([Fraction(0)] * (precision + 1 - len(cs)))
        else:
            del cs[precision + 1:]
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, value: Scalar, precision: int) -> "TruncatedSeries":
        return cls((Fraction(value),), precision)

    @classmethod
    def t_power(cls, k: int, precision: int) -> "TruncatedSeries":
        """The monomial t**k (zero series if k exceeds the precision)."""
        if k < 0:
            raise ValueError("power of t must be nonnegative")
        coeffs = [Fraction(0)] * (precision + 1)
        if k <= precision:
            coeffs[k] = Fraction(1)
        return cls(coeffs, precision)

    @classmethod
    def exp_linear(cls, rate: Scalar, precision: int) -> "TruncatedSeries":
        """The exponential series of rate*t: coefficients rate**k / k!."""
        rate = Fraction(rate)
        coeffs = [Fraction(1)]
        for k in range(1, precision + 1):
            coeffs.append(coeffs[-1] * rate / k)
        return cls(coeffs, precision)

    @property
    def precision(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def valuation(self) -> Union[int, None]:
        """Index of the first nonzero coefficient, None if all stored ones vanish."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return None

    @property
    def is_zero(self) -> bool:
        return self.valuation is None

    def coefficient(self, k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        if k >= len(self._coeffs):
            raise InsufficientPrecision(
                f"coefficient of t^{k} requested from a series of precision {self.precision}"
            )
        return self._coeffs[k]

    def truncated(self, precision: int) -> "TruncatedSeries":
        """Drop to a lower precision (never extends)."""
        if precision > self.precision:
            raise InsufficientPrecision(
                f"cannot extend precision {self.precision} to {precision}"
            )
        return TruncatedSeries(self._coeffs[: precision + 1], precision)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        return TruncatedSeries(
            [self._coeffs[i] + other._coeffs[i] for i in range(n + 1)], n
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        return TruncatedSeries(
            [self._coeffs[i] - other._coeffs[i] for i in range(n + 1)], n
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self._coeffs], self.precision)

    def __mul__(self, other: Union["TruncatedSeries", Scalar]) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            n = min(self.precision, other.precision)
            out = [Fraction(0)] * (n + 1)
            for i, a in enumerate(self._coeffs[: n + 1]):
                if not a:
                    continue
                for j in range(n + 1 - i):
                    b = other._coeffs[j]
                    if b:
                        out[i + j] += a * b
            return TruncatedSeries(out, n)
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self._coeffs], self.precision)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series power must be a nonnegative integer")
        result = TruncatedSeries.constant(1, self.precision)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        if not self._coeffs[0]:
            raise NotInvertible("series has valuation > 0 (or is zero)")
        n = self.precision
        inv0 = 1 / self._coeffs[0]
        out = [inv0] + [Fraction(0)] * n
        for k in range(1, n + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                a = self._coeffs[i]
                if a:
                    acc += a * out[k - i]
            out[k] = -inv0 * acc
        return TruncatedSeries(out, n)

    def divided_by(self, den: "TruncatedSeries") -> "TruncatedSeries":
        """Exact quotient when the numerator valuation covers the denominator's.

        The result precision is min(precisions) - valuation(den); the
        precision loss is explicit rather than silently papered over.
        """
        w = den.valuation
        if w is None:
            raise ValuationMismatch("division by the zero series")
        n = min(self.precision, den.precision)
        result_precision = n - w
        if result_precision < 0:
            raise InsufficientPrecision(
                "denominator valuation exceeds the working precision"
            )
        if self.is_zero:
            return TruncatedSeries((), result_precision)
        v = self.valuation
        assert v is not None
        if v < w:
            raise ValuationMismatch(
                f"numerator valuation {v} < denominator valuation {w}: "
                "the quotient is not a power series"
            )
        num_shifted = TruncatedSeries(self._coeffs[w: n + 1], result_precision)
        den_shifted = TruncatedSeries(den._coeffs[w: n + 1], result_precision)
        return num_shifted * den_shifted.invert()

    def scale_argument(self, factor: Scalar) -> "TruncatedSeries":
        """The series f(factor * t): coefficient k picks up factor**k."""
        factor = Fraction(factor)
        out = []
        power = Fraction(1)
        for i, c in enumerate(self._coeffs):
            if i:
                power *= factor
            out.append(c * power)
        return TruncatedSeries(out, self.precision)

    def derivative(self) -> "TruncatedSeries":
        """Term-wise d/dt; costs one order of precision."""
        if self.precision == 0:
            raise InsufficientPrecision("cannot differentiate a precision-0 series")
        return TruncatedSeries(
            [(i + 1) * c for i, c in enumerate(self._coeffs[1:])],
            self.precision - 1,
        )

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """f(inner(t)) for an inner series with zero constant term."""
        if inner._coeffs[0]:
            raise CompositionRequiresDelta(
                "inner series of a composition must have zero constant term"
            )
        n = min(self.precision, inner.precision)
        g = inner.truncated(n)
        result = TruncatedSeries.constant(self._coeffs[n], n)
        for i in range(n - 1, -1, -1):
            result = result * g + TruncatedSeries.constant(self._coeffs[i], n)
        return result

    def revert(self) -> "TruncatedSeries":
        """Compositional inverse of a valuation-1 series.

        Fixed-point iteration g <- g + (t - f(g))/f'(0) gains at least one
        correct order per step, so precision many steps suffice; the result
        is asserted to compose back to t.
        """
        if self.valuation != 1:
            raise NotDeltaSeries("reversion needs valuation exactly 1")
        n = self.precision
        a1 = self._coeffs[1]
        t = TruncatedSeries.t_power(1, n)
        g = t * (1 / a1)
        for _ in range(n):
            correction = (t - self.compose(g)) * (1 / a1)
            if correction.is_zero:
                break
            g = g + correction
        if self.compose(g) != t or g.compose(self.truncated(n)) != t:
            raise ArithmeticError("series reversion failed to converge")
        return g

    def __str__(self) -> str:
        parts: list[str] = []
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        head = "".join(parts) if parts else "0"
        return f"{head} + O(t^{self.precision + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries({self._coeffs!r}, precision={self.precision})"
