"""The unified Apostol-type family and its structural relations.

The family is generated by G(t) e^{xt} with

    G(t) = (2^(1-k) t^k / (lam * e^t - alpha))^v,

parameterized by a base-power index k >= 0, an order v >= 0 and two
rationals (lam, alpha) with alpha != 0.  The classical and Apostol
Bernoulli, Euler and Genocchi families are presets of (k, lam, alpha) up
to a rational prefactor.

Only (lam, alpha) are modeled, not any further factorization of them:
every identity implemented here depends on the underlying family
parameters through these two values (and their m-th powers in the
argument-scaling formula), and the sign conventions are fixed by binomial
expansion of (lam e^t - alpha)^j.

Tables of the polynomials are cached per parameter tuple and grown on
demand, so repeated checks over a grid never rebuild a series.  For
k = 0 the denominator must not vanish at t = 0 (lam != alpha), otherwise
the would-be generating function has a pole and construction raises
SingularParams.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .combinatorics import binomial, enumerate_compositions
from .errors import IndexUnderflow, InsufficientPrecision, SingularParams
from .polynomial import Polynomial
from .series import TruncatedSeries

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class UnifiedParams:
    """Parameter tuple (k, v, lam, alpha) of the unified family."""

    k: int
    v: int
    lam: Fraction
    alpha: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.k < 0:
            raise ValueError("k must be nonnegative")
        if self.v < 0:
            raise ValueError("the order v must be nonnegative")
        if not self.alpha:
            raise ValueError("alpha must be nonzero")
        if self.k == 0 and self.lam == self.alpha:
            raise SingularParams(
                "k = 0 with lam = alpha: the generating function has a pole at t = 0"
            )

    @property
    def denominator_valuation(self) -> int:
        """Valuation of lam*e^t - alpha: 1 when lam = alpha, else 0."""
        return 1 if self.lam == self.alpha else 0

    @property
    def table_valuation(self) -> int:
        """Index below which every polynomial of the family vanishes."""
        return self.v * (self.k - self.denominator_valuation)

    def sort_key(self) -> tuple:
        return (
            self.k,
            self.v,
            self.lam.numerator,
            self.lam.denominator,
            self.alpha.numerator,
            self.alpha.denominator,
        )


def params_valid(k: int, v: int, lam: Scalar, alpha: Scalar) -> bool:
    """Whether UnifiedParams(k, v, lam, alpha) is constructible."""
    lam, alpha = Fraction(lam), Fraction(alpha)
    return alpha != 0 and k >= 0 and v >= 0 and not (k == 0 and lam == alpha)


def working_precision(params: UnifiedParams, n_max: int) -> int:
    """Truncation order used to build the table: n_max + v*max(k, 1) + 4 guards."""
    return n_max + params.v * max(params.k, 1) + 4


def base_series(params: UnifiedParams, precision: int) -> TruncatedSeries:
    """G(t) = (2^(1-k) t^k)^v / (lam e^t - alpha)^v at the given input precision.

    The division costs v orders of precision when lam = alpha; the loss is
    explicit in the result.
    """
    k, v = params.k, params.v
    if v == 0:
        return TruncatedSeries.constant(1, precision)
    denom = (
        TruncatedSeries.exp_linear(1, precision) * params.lam
        - TruncatedSeries.constant(params.alpha, precision)
    ) ** v
    numer = TruncatedSeries.t_power(k * v, precision) * Fraction(2) ** ((1 - k) * v)
    return numer.divided_by(denom)


_TABLE_LOCK = threading.Lock()
_TABLES: dict[UnifiedParams, tuple[int, tuple[Polynomial, ...]]] = {}


def _build_table(
    params: UnifiedParams, n_max: int, min_precision: Union[int, None] = None
) -> tuple[Polynomial, ...]:
    precision = working_precision(params, n_max)
    if min_precision is not None:
        precision = max(precision, min_precision)
    series = base_series(params, precision)
    if series.precision < n_max:
        raise InsufficientPrecision(
            "guarded working precision fell short; increase the guard terms"
        )
    # weights c_j = j! [t^j] G
    weights = []
    fact = 1
    for j in range(n_max + 1):
        if j:
            fact *= j
        weights.append(fact * series.coefficient(j))
    polys = []
    for n in range(n_max + 1):
        coeffs = [binomial(n, i) * weights[n - i] for i in range(n + 1)]
        polys.append(Polynomial(coeffs))
    return tuple(polys)


def unified_polynomials(
    params: UnifiedParams, n_max: int, min_precision: Union[int, None] = None
) -> tuple[Polynomial, ...]:
    """The family polynomials for n = 0..n_max (cached, grown on demand).

    Raising min_precision only adds guard terms to the internal series;
    the exact results never change, so the cache ignores it.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    with _TABLE_LOCK:
        entry = _TABLES.get(params)
    if entry is not None and entry[0] >= n_max and min_precision is None:
        return entry[1][: n_max + 1]
    built = _build_table(params, n_max, min_precision)
    with _TABLE_LOCK:
        current = _TABLES.get(params)
        if current is None or current[0] < n_max:
            _TABLES[params] = (n_max, built)
    return built


def unified_value(params: UnifiedParams, n: int, x0: Scalar) -> Fraction:
    """Exact value of the n-th family polynomial at x0."""
    return unified_polynomials(params, n)[n].evaluate(x0)


@dataclass(frozen=True)
class FamilyPreset:
    """A named specialization: `prefactor * unified polynomial` is the named family."""

    name: str
    params: UnifiedParams
    prefactor: Fraction


def classical_bernoulli(order: int = 1) -> FamilyPreset:
    return FamilyPreset(
        "classical-bernoulli",
        UnifiedParams(1, order, Fraction(1), Fraction(1)),
        Fraction(1),
    )


def classical_euler(order: int = 1) -> FamilyPreset:
    return FamilyPreset(
        "classical-euler",
        UnifiedParams(0, order, Fraction(1), Fraction(-1)),
        Fraction(1),
    )


def classical_genocchi(order: int = 1) -> FamilyPreset:
    return FamilyPreset(
        "classical-genocchi",
        UnifiedParams(1, order, Fraction(1), Fraction(-1)),
        Fraction(2) ** order,
    )


def apostol_bernoulli(beta: Scalar, order: int = 1) -> FamilyPreset:
    return FamilyPreset(
        "apostol-bernoulli",
        UnifiedParams(1, order, Fraction(beta), Fraction(1)),
        Fraction(1),
    )


def apostol_euler(beta: Scalar, order: int = 1) -> FamilyPreset:
    return FamilyPreset(
        "apostol-euler",
        UnifiedParams(0, order, Fraction(beta), Fraction(-1)),
        Fraction(1),
    )


def apostol_genocchi(beta: Scalar, order: int = 1) -> FamilyPreset:
    return FamilyPreset(
        "apostol-genocchi",
        UnifiedParams(1, order, Fraction(beta), Fraction(-1)),
        Fraction(2) ** order,
    )


def unified(k: int, v: int, lam: Scalar, alpha: Scalar) -> FamilyPreset:
    return FamilyPreset(
        "unified", UnifiedParams(k, v, Fraction(lam), Fraction(alpha)), Fraction(1)
    )


def preset_polynomials(preset: FamilyPreset, n_max: int) -> tuple[Polynomial, ...]:
    """The named family's polynomials (prefactor applied)."""
    table = unified_polynomials(preset.params, n_max)
    if preset.prefactor == 1:
        return table
    return tuple(p * preset.prefactor for p in table)


@dataclass(frozen=True)
class Conversion:
    """How one family value rewrites into a named target family.

    unified(params)[n] == multiplier * family_prefactor * unified(target)[n - shift]
    where family_prefactor * unified(target) is the named target family
    (the prefactor is 1 except for the Genocchi target, whose named
    polynomials are 2^v times the unified ones).
    """

    target: UnifiedParams
    family_prefactor: Fraction
    multiplier: Fraction
    shift: int


def _falling(n: int, count: int) -> Fraction:
    out = Fraction(1)
    for i in range(count):
        out *= n - i
    return out


def convert_to_apostol_bernoulli(params: UnifiedParams, n: int) -> Conversion:
    """Rewrite index n of the family as an order-v Apostol-Bernoulli value."""
    if params.k < 1:
        raise IndexUnderflow("the Bernoulli reduction needs k >= 1")
    shift = params.v * (params.k - 1)
    if n < shift:
        raise IndexUnderflow(f"index {n} is below the degree shift {shift}")
    target = UnifiedParams(1, params.v, params.lam / params.alpha, Fraction(1))
    multiplier = _falling(n, shift) / (Fraction(2) ** shift * params.alpha**params.v)
    return Conversion(target, Fraction(1), multiplier, shift)


def convert_to_apostol_euler(params: UnifiedParams, n: int) -> Conversion:
    """Rewrite index n as an order-v Apostol-Euler value.

    The multiplier carries (-1)^v as forced by pulling -1/alpha out of the
    denominator v times; the stated form with a bare minus sign is what the
    identity suite compares against and reports on.
    """
    shift = params.k * params.v
    if n < shift:
        raise IndexUnderflow(f"index {n} is below the degree shift {shift}")
    if params.lam == params.alpha:
        raise SingularParams(
            "Euler target needs lam != alpha (its k = 0 family would be singular)"
        )
    target = UnifiedParams(0, params.v, -params.lam / params.alpha, Fraction(-1))
    multiplier = (
        Fraction(-1) ** params.v
        * _falling(n, shift)
        / (Fraction(2) ** shift * params.alpha**params.v)
    )
    return Conversion(target, Fraction(1), multiplier, shift)


def convert_to_apostol_genocchi(params: UnifiedParams, n: int) -> Conversion:
    """Rewrite index n as an order-v Apostol-Genocchi value (2^v prefactor)."""
    if params.k < 1:
        raise IndexUnderflow("the Genocchi reduction needs k >= 1")
    shift = params.v * (params.k - 1)
    if n < shift:
        raise IndexUnderflow(f"index {n} is below the degree shift {shift}")
    target = UnifiedParams(1, params.v, -params.lam / params.alpha, Fraction(-1))
    multiplier = (
        Fraction(-1) ** params.v
        * _falling(n, shift)
        / (Fraction(2) ** (params.k * params.v) * params.alpha**params.v)
    )
    return Conversion(target, Fraction(2) ** params.v, multiplier, shift)


def power_params(params: UnifiedParams, m: int) -> UnifiedParams:
    """The (lam^m, alpha^m) family entering the argument-scaling formula."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    return UnifiedParams(params.k, params.v, params.lam**m, params.alpha**m)


def multiplication_formula_rhs(params: UnifiedParams, m: int, n: int) -> Polynomial:
    """The composition-sum side of the argument-scaling formula for index n.

    m^(n-kv) * alpha^(v(m-1)) * sum over compositions (u_0..u_{m-1}) of v of
    multinomial(u) * (lam/alpha)^j * P_n(x + j/m) over the (lam^m, alpha^m)
    family, j = sum(i * u_i).  Raises SingularParams when that family is
    singular (k = 0 with lam^m = alpha^m).
    """
    target = power_params(params, m)
    table = unified_polynomials(target, n)
    if m == 1:
        return table[n]
    ratio = params.lam / params.alpha
    acc = Polynomial()
    by_weight: dict[int, int] = {}
    for comp in enumerate_compositions(params.v, m):
        by_weight[comp.weight] = by_weight.get(comp.weight, 0) + comp.multiplicity
    for j in sorted(by_weight):
        coeff = by_weight[j] * ratio**j
        acc = acc + table[n].shifted(Fraction(j, m)) * coeff
    scale = Fraction(m) ** (n - params.k * params.v) * params.alpha ** (
        params.v * (m - 1)
    )
    return acc * scale
