"""Exception types shared across the engine.

Every error raised by the engine derives from EngineError so callers (and
the CLI) can catch arithmetic and usage failures uniformly without
swallowing genuine bugs.
"""


class EngineError(Exception):
    """Base class for all engine-level failures."""


class NotInvertible(EngineError):
    """Series has no multiplicative inverse (zero constant term)."""


class ValuationMismatch(EngineError):
    """Series division would need negative powers of t."""


class CompositionRequiresDelta(EngineError):
    """Inner series of a composition has a nonzero constant term."""


class NotDeltaSeries(EngineError):
    """Series reversion needs valuation exactly 1."""


class InsufficientPrecision(EngineError):
    """A truncated series is too short for the requested operation."""


class IndexOutOfTriangle(EngineError):
    """Stirling index outside 0 <= m <= n."""


class IndexOutOfRange(EngineError):
    """Sequence index outside the constructed range."""


class IndexUnderflow(EngineError):
    """Family conversion asked for a negative target index."""


class ZeroScale(EngineError):
    """Argument scaling by zero where a nonzero factor is required."""


class SingularParams(EngineError):
    """Parameter tuple whose generating function is not a power series."""
