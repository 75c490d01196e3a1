"""Acceptance gate: every criterion as one test, with exact comparisons only.

Each test prints a single pass line (visible under ``pytest -s`` or when
running this file directly with ``python tests/test_acceptance.py``).
Budgets stated alongside a criterion are asserted, not aspirational.
"""

import contextlib
import io
import time
from fractions import Fraction as F
from oracles import (
    bernoulli_polynomials,
    euler_polynomials,
    genocchi_numbers,
    genocchi_numbers_by_division,
    genocchi_polynomials,
)
from test_exprlang import MALFORMED_CASES
from umbralcalc.apostol import (
    UnifiedParams,
    apostol_euler,
    classical_bernoulli,
    classical_euler,
    classical_genocchi,
    multiplication_formula_rhs,
    power_params,
    preset_polynomials,
    unified_polynomials,
)
from umbralcalc.cli import main as cli_main
from umbralcalc.errors import SingularParams, ValuationMismatch
from umbralcalc.exprlang import evaluate_text, parse
from umbralcalc.identities import (
    CORE_CHECK_IDS,
    default_grid,
    grid_params,
    run_suite,
    summarize,
)
from umbralcalc.polynomial import Polynomial
from umbralcalc.series import TruncatedSeries
from umbralcalc.umbral import (
    ShefferPair,
    first_orthogonality_failure,
    functional_apply,
    sheffer_sequence,
)


def _announce(label: str, started: float) -> None:
    print(f"acceptance {label}: PASS ({time.perf_counter() - started:.2f}s)")


def _bernoulli_weight(precision: int) -> TruncatedSeries:
    return (
        TruncatedSeries.exp_linear(1, precision + 1)
        - TruncatedSeries.constant(1, precision + 1)
    ).divided_by(TruncatedSeries.t_power(1, precision + 1))


def test_criterion_1_classical_reproduction():
    started = time.perf_counter()
    n_max = 12
    assert list(preset_polynomials(classical_bernoulli(), n_max)) == (
        bernoulli_polynomials(n_max)
    )
    assert list(preset_polynomials(classical_euler(), n_max)) == euler_polynomials(n_max)
    genocchi = preset_polynomials(classical_genocchi(), n_max)
    assert list(genocchi) == genocchi_polynomials(n_max)
    # the number-level cross-check runs through both independent oracles
    assert genocchi_numbers(n_max) == genocchi_numbers_by_division(n_max)
    assert [p.evaluate(0) for p in genocchi] == genocchi_numbers(n_max)
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"criterion 1 budget exceeded: {elapsed:.2f}s"
    _announce("criterion-1 classical-reproduction", started)


def test_criterion_2_orthogonality():
    started = time.perf_counter()
    n_max = 10
    precision = n_max + 2
    t = TruncatedSeries.t_power(1, precision)

    # presets whose base weight is an invertible series, paired with their
    # unified tables
    euler_weight = (
        TruncatedSeries.exp_linear(1, precision) + TruncatedSeries.constant(1, precision)
    ) * F(1, 2)
    cases = [
        (_bernoulli_weight(precision), classical_bernoulli()),
        (euler_weight, classical_euler()),
    ]
    for beta in (F(2), F(1, 2), F(3)):
        weight = (
            TruncatedSeries.exp_linear(1, precision) * beta
            + TruncatedSeries.constant(1, precision)
        ) * F(1, 2)
        cases.append((weight, apostol_euler(beta)))
    for weight, preset in cases:
        pair = ShefferPair(weight, t)
        polys = preset_polynomials(preset, n_max)
        assert first_orthogonality_failure(pair, polys) is None, preset.name

    # the general delta pair: binomial-type lowering to falling factorials
    forward_difference = TruncatedSeries.exp_linear(1, precision) - TruncatedSeries.constant(
        1, precision
    )
    pair = ShefferPair(TruncatedSeries.constant(1, precision), forward_difference)
    seq = sheffer_sequence(pair, n_max)
    assert first_orthogonality_failure(pair, seq.polys) is None

    # presets whose head polynomial vanishes admit no orthogonal sequence:
    # the would-be weight is not an invertible series and the engine says so
    for params in (UnifiedParams(1, 1, F(2), F(1)), UnifiedParams(1, 1, F(1), F(-1))):
        assert unified_polynomials(params, 0)[0].is_zero
        base = TruncatedSeries.exp_linear(1, precision) * params.lam - TruncatedSeries.constant(
            params.alpha, precision
        )
        try:
            base.divided_by(TruncatedSeries.t_power(1, precision))
        except ValuationMismatch:
            pass
        else:
            raise AssertionError("expected the weight construction to be rejected")

    elapsed = time.perf_counter() - started
    assert elapsed < 5.0, f"criterion 2 budget exceeded: {elapsed:.2f}s"
    _announce("criterion-2 orthogonality", started)


def test_criterion_3_identity_suite_green():
    started = time.perf_counter()
    reports = run_suite(default_grid(), CORE_CHECK_IDS, jobs=1)
    stats = summarize(reports)
    failed = [r for r in reports if r.status == "fail"]
    assert failed == [], failed[:3]
    assert stats["fail"] == 0
    assert stats["pass"] > 0
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0, f"criterion 3 budget exceeded: {elapsed:.2f}s"
    _announce(
        f"criterion-3 identity-suite-green ({stats['pass']} pass, "
        f"{stats['skipped']} skipped)",
        started,
    )


def test_criterion_4_multiplication_formula():
    started = time.perf_counter()
    grid = default_grid()
    n_max = grid.n_max
    checked = 0
    for params in grid_params(grid):
        if params.v not in (1, 2):
            continue
        for m in (2, 3):
            try:
                unified_polynomials(power_params(params, m), n_max)
            except SingularParams:
                continue
            table = unified_polynomials(params, n_max)
            for n in range(n_max + 1):
                assert multiplication_formula_rhs(params, m, n) == table[n].scaled(m)
            checked += 1
    assert checked > 100

    # classical corollaries: Bernoulli doubling/tripling and odd-scale Euler
    bernoulli = UnifiedParams(1, 1, F(1), F(1))
    b_table = unified_polynomials(bernoulli, n_max)
    for m in (2, 3):
        for n in range(n_max + 1):
            assert multiplication_formula_rhs(bernoulli, m, n) == b_table[n].scaled(m)
    euler = UnifiedParams(0, 1, F(1), F(-1))
    e_table = unified_polynomials(euler, n_max)
    for n in range(n_max + 1):
        assert multiplication_formula_rhs(euler, 3, n) == e_table[n].scaled(3)

    # even-scale Euler goes through the alternating Bernoulli sum
    bigger = unified_polynomials(bernoulli, n_max + 1)
    for m in (2,):
        for n in range(n_max + 1):
            acc = Polynomial()
            for j in range(m):
                term = bigger[n + 1].shifted(F(j, m))
                acc = acc + (term if j % 2 == 0 else -term)
            rhs = acc * F(-2 * m**n, n + 1)
            assert e_table[n].scaled(m) == rhs
    _announce(f"criterion-4 multiplication-formula ({checked} grid points)", started)


def test_criterion_5_discrepancy_findings():
    started = time.perf_counter()
    grid = default_grid()
    points = grid_params(grid)
    dual = ("check_family_conversions", "check_stirling_first_expansion")
    first = run_suite(grid, dual)
    second = run_suite(grid, dual)
    assert [r.to_record() for r in first] == [r.to_record() for r in second]

    by_check = {cid: [r for r in first if r.check_id == cid] for cid in dual}
    # one definite report per grid point for each dual check, never skipped
    for cid in dual:
        assert len(by_check[cid]) == len(points)
        assert all(r.status in ("pass", "fail") for r in by_check[cid])
        assert all(r.detail for r in by_check[cid])
    for r in by_check["check_stirling_first_expansion"]:
        assert set(r.detail) == {"stated_form", "derived_form"}
        assert set(r.detail.values()) <= {"match", "mismatch"}
    stated_k2_findings = [
        r
        for r in by_check["check_stirling_first_expansion"]
        if r.params["k"] >= 2 and r.paper_discrepancy is not None
    ]
    assert stated_k2_findings, "expected stated-form findings at k >= 2"
    summary = summarize(first)
    assert summary["discrepancy_notes"] >= len(stated_k2_findings)
    _announce(
        f"criterion-5 discrepancy-findings ({summary['discrepancy_notes']} notes)",
        started,
    )


def test_criterion_6_shift_up_constant_gap():
    started = time.perf_counter()
    n_max = 10
    presets = [
        classical_bernoulli(),
        classical_euler(),
        classical_genocchi(),
        apostol_euler(F(2)),
        apostol_euler(F(1, 2)),
    ]
    probes = [
        TruncatedSeries.exp_linear(c, 4) - TruncatedSeries.constant(1, 4)
        for c in (F(1), F(1, 2), F(-1))
    ]
    for preset in presets:
        table = unified_polynomials(preset.params, n_max + 1)
        for n in range(n_max + 1):
            raised = table[n + 1] * F(1, n + 1)
            gap = raised - table[n].antiderivative()
            assert gap.degree in (None, 0), (preset.name, n)
            for probe in probes:
                assert functional_apply(probe, gap) == 0
    _announce("criterion-6 shift-up-constant-gap", started)


def test_criterion_7_parser_contract():
    started = time.perf_counter()
    assert str(evaluate_text("<t^2 | x^2>")) == "2"
    assert str(evaluate_text("<exp(2*t)-1 | x^3>")) == "8"
    assert str(evaluate_text("Y(2; k=1, v=1, L=1, A=1)")) == "x^2 - x + 1/6"
    assert len(MALFORMED_CASES) >= 20
    for text, error, offset in MALFORMED_CASES:
        try:
            parse(text)
        except error as exc:
            assert exc.offset == offset, (text, exc.offset, offset)
            assert 0 <= exc.offset < max(1, len(text))
        else:
            raise AssertionError(f"expected {error.__name__} for {text!r}")
    _announce(f"criterion-7 parser-contract ({len(MALFORMED_CASES)} malformed cases)", started)


def test_criterion_8_jobs_determinism():
    started = time.perf_counter()

    def run(jobs: str) -> tuple[int, str]:
        buffer = io.StringIO()
        with contextlib.redirect_stdout(buffer):
            code = cli_main(["verify", "--suite", "all", "--jobs", jobs])
        return code, buffer.getvalue()

    code1, out1 = run("1")
    code4, out4 = run("4")
    assert out1 == out4
    assert code1 == code4
    _announce("criterion-8 jobs-determinism", started)


if __name__ == "__main__":
    import sys

    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_") and callable(fn):
            try:
                fn()
            except AssertionError as exc:
                failures += 1
                print(f"acceptance {name}: FAIL ({exc})")
    sys.exit(1 if failures else 0)
