"""Exact umbral calculus for Appell/Sheffer sequences and the unified Apostol-type family."""

from .apostol import (
    Conversion,
    FamilyPreset,
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
    power_params,
    preset_polynomials,
    unified,
    unified_polynomials,
    unified_value,
)
from .combinatorics import (
    Composition,
    StirlingTable,
    binomial,
    enumerate_compositions,
    falling_factorial,
    multinomial,
    stirling_first_signed,
    stirling_second,
)
from .errors import (
    CompositionRequiresDelta,
    EngineError,
    IndexOutOfRange,
    IndexOutOfTriangle,
    IndexUnderflow,
    InsufficientPrecision,
    NotDeltaSeries,
    NotInvertible,
    SingularParams,
    ValuationMismatch,
    ZeroScale,
)
from .exprlang import evaluate_text, parse, render
from .identities import (
    ALL_CHECK_IDS,
    CORE_CHECK_IDS,
    CheckReport,
    SuiteGrid,
    default_grid,
    run_suite,
    summarize,
)
from .polynomial import Polynomial, X, format_rational, parse_rational
from .series import TruncatedSeries
from .umbral import (
    ShefferPair,
    ShefferSequence,
    appell_multiplication,
    appell_recurrence_step,
    appell_sequence,
    first_orthogonality_failure,
    functional_apply,
    operator_apply,
    sheffer_sequence,
    sheffer_shift_up,
)

__version__ = "0.1.0"
