from fractions import Fraction as F

import pytest

from oracles import (
    bernoulli_polynomials,
    euler_polynomials,
    genocchi_numbers,
    genocchi_numbers_by_division,
    genocchi_polynomials,
)
from umbralcalc.apostol import (
    UnifiedParams,
    apostol_bernoulli,
    apostol_euler,
    apostol_genocchi,
    classical_bernoulli,
    classical_euler,
    classical_genocchi,
    convert_to_apostol_bernoulli,
    convert_to_apostol_euler,
    convert_to_apostol_genocchi,
    multiplication_formula_rhs,
    params_valid,
    power_params,
    preset_polynomials,
    unified_polynomials,
    unified_value,
)
from umbralcalc.combinatorics import binomial
from umbralcalc.errors import IndexUnderflow, SingularParams
from umbralcalc.polynomial import Polynomial


def test_params_validation():
    with pytest.raises(ValueError):
        UnifiedParams(-1, 0, F(1), F(1))
    with pytest.raises(ValueError):
        UnifiedParams(1, -1, F(1), F(1))
    with pytest.raises(ValueError):
        UnifiedParams(1, 1, F(1), F(0))
    with pytest.raises(SingularParams):
        UnifiedParams(0, 1, F(2), F(2))
    with pytest.raises(SingularParams):
        UnifiedParams(0, 0, F(2), F(2))
    assert params_valid(1, 1, 2, 2)
    assert not params_valid(0, 1, 2, 2)
    assert not params_valid(1, 1, 1, 0)


def test_table_classical_bernoulli():
    table = unified_polynomials(UnifiedParams(1, 1, F(1), F(1)), 2)
    assert table[2] == Polynomial([F(1, 6), -1, 1])


def test_table_vanishing_head():
    # a valuation argument: the numerator carries t while the base is invertible
    assert unified_polynomials(UnifiedParams(1, 1, F(2), F(1)), 0)[0] == Polynomial()


def test_table_classical_euler():
    assert unified_polynomials(UnifiedParams(0, 1, F(1), F(-1)), 2)[2] == Polynomial(
        [0, -1, 1]
    )


def test_table_k2_lowers_to_half_index():
    assert unified_polynomials(UnifiedParams(2, 1, F(1), F(1)), 2)[2] == Polynomial(
        [F(-1, 2), 1]
    )


def test_table_order_zero_is_monomials():
    for params in (UnifiedParams(3, 0, F(5), F(3)), UnifiedParams(0, 0, F(1), F(2))):
        table = unified_polynomials(params, 5)
        assert list(table) == [Polynomial.x_power(n) for n in range(6)]


def test_table_cache_growth_is_consistent():
    params = UnifiedParams(2, 2, F(3), F(-2, 3))
    small = unified_polynomials(params, 4)
    large = unified_polynomials(params, 9)
    assert large[:5] == small


def test_table_cache_is_safe_under_concurrent_first_use():
    from concurrent.futures import ThreadPoolExecutor

    params = UnifiedParams(3, 3, F(-2, 3), F(1, 2))
    with ThreadPoolExecutor(max_workers=8) as pool:
        tables = list(pool.map(lambda _: unified_polynomials(params, 10), range(16)))
    assert all(t == tables[0] for t in tables)


def test_values():
    bernoulli = UnifiedParams(1, 1, F(1), F(1))
    assert unified_value(bernoulli, 1, F(0)) == F(-1, 2)
    assert unified_value(UnifiedParams(1, 1, F(2), F(1)), 0, F(7)) == 0
    euler = UnifiedParams(0, 1, F(1), F(-1))
    assert unified_value(euler, 2, F(1, 2)) == F(-1, 4)


def test_presets_match_recurrence_oracles():
    n_max = 12
    assert list(preset_polynomials(classical_bernoulli(), n_max)) == bernoulli_polynomials(
        n_max
    )
    assert list(preset_polynomials(classical_euler(), n_max)) == euler_polynomials(n_max)
    assert list(preset_polynomials(classical_genocchi(), n_max)) == genocchi_polynomials(
        n_max
    )


def test_power_sums_from_the_family():
    # sum_{i<m} i^p = (P_{p+1}(m) - P_{p+1}(0))/(p+1) at the classical point
    table = unified_polynomials(UnifiedParams(1, 1, F(1), F(1)), 7)
    for p in range(6):
        for m in (1, 5, 10):
            direct = sum(F(i) ** p for i in range(m))
            closed = (table[p + 1].evaluate(m) - table[p + 1].evaluate(0)) / (p + 1)
            assert closed == direct


def test_genocchi_number_oracles_agree():
    assert genocchi_numbers(12) == genocchi_numbers_by_division(12)
    table = preset_polynomials(classical_genocchi(), 12)
    assert [p.evaluate(0) for p in table] == genocchi_numbers(12)


def test_apostol_presets_shape():
    beta = F(2)
    bern = preset_polynomials(apostol_bernoulli(beta), 6)
    # the order-one family starts at degree -1 steps: index 0 vanishes
    assert bern[0] == Polynomial()
    assert bern[1] == Polynomial.constant(F(1, beta - 1))
    euler = preset_polynomials(apostol_euler(beta), 6)
    assert euler[0] == Polynomial.constant(F(2, beta + 1))
    gen = preset_polynomials(apostol_genocchi(beta), 6)
    assert gen[0] == Polynomial()
    assert gen[1] == Polynomial.constant(F(2, beta + 1))


def test_derivative_index_law_across_params():
    for params in (
        UnifiedParams(1, 1, F(1), F(1)),
        UnifiedParams(0, 2, F(2), F(-1)),
        UnifiedParams(2, 1, F(1, 2), F(3)),
        UnifiedParams(3, 2, F(-2, 3), F(-2, 3)),
    ):
        table = unified_polynomials(params, 10)
        for n in range(1, 11):
            assert table[n].derivative() == table[n - 1] * n


def test_shifted_argument_binomial_law():
    for params in (
        UnifiedParams(1, 1, F(2), F(1)),
        UnifiedParams(0, 1, F(1), F(-1)),
        UnifiedParams(2, 2, F(1), F(1)),
    ):
        table = unified_polynomials(params, 8)
        for y0 in (F(1), F(-1, 2)):
            for n in range(9):
                acc = Polynomial()
                for i in range(n + 1):
                    acc = acc + table[i] * (binomial(n, i) * y0 ** (n - i))
                assert table[n].shifted(y0) == acc


def test_degree_and_leading_coefficient():
    # degree n exactly iff the base series starts at order zero, and then
    # the leading coefficient is the series head
    from umbralcalc.apostol import base_series, working_precision

    params = UnifiedParams(1, 2, F(1), F(1))
    full = unified_polynomials(params, 8)
    head = base_series(params, working_precision(params, 8)).coefficient(0)
    assert all(p.degree == n for n, p in enumerate(full))
    assert all(p.coefficient(n) == head for n, p in enumerate(full))
    shifted = unified_polynomials(UnifiedParams(1, 2, F(2), F(1)), 8)
    assert all(p.is_zero for p in shifted[:2])
    assert all(p.degree == n - 2 for n, p in enumerate(shifted) if n >= 2)


def test_convert_bernoulli_k1_is_pure_rescale():
    params = UnifiedParams(1, 2, F(3), F(2))
    conv = convert_to_apostol_bernoulli(params, 5)
    assert conv.shift == 0
    assert conv.multiplier == F(1, 4)
    lhs = unified_polynomials(params, 5)[5]
    rhs = unified_polynomials(conv.target, 5)[5] * (conv.multiplier * conv.family_prefactor)
    assert lhs == rhs


def test_convert_bernoulli_k2_example():
    params = UnifiedParams(2, 1, F(1), F(1))
    conv = convert_to_apostol_bernoulli(params, 2)
    assert conv.shift == 1
    target = unified_polynomials(conv.target, 1)
    assert conv.multiplier * target[1] == Polynomial([F(-1, 2), 1])


def test_convert_index_underflow():
    with pytest.raises(IndexUnderflow):
        convert_to_apostol_bernoulli(UnifiedParams(2, 2, F(1), F(1)), 1)
    with pytest.raises(IndexUnderflow):
        convert_to_apostol_bernoulli(UnifiedParams(0, 1, F(2), F(1)), 3)
    with pytest.raises(IndexUnderflow):
        convert_to_apostol_genocchi(UnifiedParams(0, 1, F(2), F(1)), 3)
    with pytest.raises(IndexUnderflow):
        convert_to_apostol_euler(UnifiedParams(2, 2, F(2), F(1)), 3)


def test_convert_euler_singular_at_equal_parameters():
    with pytest.raises(SingularParams):
        convert_to_apostol_euler(UnifiedParams(1, 1, F(1), F(1)), 4)


def test_convert_euler_and_genocchi_reproduce_table():
    params = UnifiedParams(1, 1, F(2), F(1))
    table = unified_polynomials(params, 6)
    for n in range(1, 7):
        conv_e = convert_to_apostol_euler(params, n)
        named_e = unified_polynomials(conv_e.target, n)[n - conv_e.shift]
        assert table[n] == conv_e.multiplier * conv_e.family_prefactor * named_e
        conv_g = convert_to_apostol_genocchi(params, n)
        named_g = (
            unified_polynomials(conv_g.target, n)[n - conv_g.shift]
            * conv_g.family_prefactor
        )
        assert table[n] == conv_g.multiplier * named_g


def test_convert_genocchi_is_half_relation_at_preset():
    # the Genocchi preset relation: the unified table is half the named family
    params = UnifiedParams(1, 1, F(1), F(-1))
    conv = convert_to_apostol_genocchi(params, 3)
    assert conv.target == params
    assert conv.multiplier * conv.family_prefactor == 1
    table = unified_polynomials(params, 3)
    named = preset_polynomials(classical_genocchi(), 3)
    assert [p * 2 for p in table] == list(named)


def test_power_params():
    params = UnifiedParams(1, 1, F(2), F(3))
    assert power_params(params, 2) == UnifiedParams(1, 1, F(4), F(9))
    with pytest.raises(SingularParams):
        power_params(UnifiedParams(0, 1, F(1), F(-1)), 2)
    with pytest.raises(ValueError):
        power_params(params, 0)


def test_multiplication_rhs_identity_at_m1():
    params = UnifiedParams(1, 2, F(2), F(1))
    table = unified_polynomials(params, 5)
    for n in range(6):
        assert multiplication_formula_rhs(params, 1, n) == table[n]


def test_multiplication_rhs_bernoulli_doubling():
    params = UnifiedParams(1, 1, F(1), F(1))
    rhs = multiplication_formula_rhs(params, 2, 2)
    assert rhs == Polynomial([F(1, 6), -2, 4])
    assert rhs == unified_polynomials(params, 2)[2].scaled(2)


def test_multiplication_rhs_euler_tripling():
    params = UnifiedParams(0, 1, F(1), F(-1))
    rhs = multiplication_formula_rhs(params, 3, 1)
    assert rhs == unified_polynomials(params, 1)[1].scaled(3)


def test_multiplication_rhs_matches_substitution_broadly():
    for params in (
        UnifiedParams(1, 1, F(1), F(1)),
        UnifiedParams(1, 2, F(2), F(1)),
        UnifiedParams(2, 1, F(1, 2), F(3)),
        UnifiedParams(0, 2, F(2), F(-1)),
        UnifiedParams(3, 2, F(-2, 3), F(-2, 3)),
    ):
        table = unified_polynomials(params, 8)
        for m in (2, 3):
            try:
                power_params(params, m)
            except SingularParams:
                continue
            for n in range(9):
                assert multiplication_formula_rhs(params, m, n) == table[n].scaled(m)
