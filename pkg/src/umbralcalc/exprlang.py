"""A small expression language for brackets, series and polynomials.

Grammar (the stable contract of the ``eval`` subcommand)::

    expr    := bracket | sum
    bracket := "<" sum "|" sum ">"
    sum     := term (("+" | "-") term)*
    term    := factor (("*" | "/") factor)*
    factor  := "-" factor | atom ("^" nat)?
    atom    := rational | "t" | "x" | "exp" "(" rational "*" "t" ")"
             | "Y" "(" nat ";" k=nat, v=nat, L=rational, A=rational ")"
             | ("B" | "E" | "G") "(" nat ")"
             | "apply" "(" expr "," expr ")"
             | "shift" "(" expr "," rational ")"
             | "integral" "(" expr "," rational "," rational ")"
             | "(" expr ")"

Two integers joined by "/" fold into a single rational literal unless the
denominator carries an exponent, so "1/2 + 1/3" is a sum of two literals
while "8/4^2" stays a quotient with the usual precedence.  A unary minus
applies to the whole factor after it, as the grammar says, and a negated
literal folds into a negative literal.

Every expression splits into series-context subtrees (may contain t,
never x) and polynomial-context subtrees (may contain x, never t);
brackets and apply(...) are the only nodes joining the two.  Scalars
embed in either context.  Violations raise ExprTypeError at the
offending variable's offset; malformed input raises ExprSyntaxError with
the byte offset and the expected-token set.  Division is rejected in
polynomial context and routes through valuation-checked division in
series context.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .apostol import UnifiedParams, unified_polynomials
from .errors import EngineError
from .polynomial import Polynomial
from .series import TruncatedSeries
from .umbral import functional_apply, operator_apply

DEFAULT_PRECISION = 32


class ExprSyntaxError(EngineError):
    """Malformed input; carries the byte offset and the expected tokens."""

    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        super().__init__(message)
        self.offset = offset
        self.expected = expected


class ExprTypeError(EngineError):
    """A t/x context violation, reported at the offending variable."""

    def __init__(self, message: str, offset: int):
        super().__init__(message)
        self.offset = offset


class ExprEvaluationError(EngineError):
    """An arithmetic error surfaced during evaluation, with its source span."""

    def __init__(self, message: str, offset: int):
        super().__init__(message)
        self.offset = offset


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class RationalLit:
    value: Fraction
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class VarT:
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class VarX:
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class ExpSeries:
    rate: Fraction
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class UnifiedCall:
    n: int
    k: int
    v: int
    lam: Fraction
    alpha: Fraction
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class PresetCall:
    family: str  # "B" | "E" | "G"
    n: int
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Neg:
    item: "ExprAst"
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Add:
    left: "ExprAst"
    right: "ExprAst"
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Sub:
    left: "ExprAst"
    right: "ExprAst"
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Mul:
    left: "ExprAst"
    right: "ExprAst"
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Div:
    left: "ExprAst"
    right: "ExprAst"
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Pow:
    base: "ExprAst"
    exponent: int
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Bracket:
    series: "ExprAst"
    poly: "ExprAst"
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Apply:
    series: "ExprAst"
    poly: "ExprAst"
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Shift:
    target: "ExprAst"
    offset: Fraction
    pos: int = field(compare=False, default=0)


@dataclass(frozen=True)
class Integral:
    target: "ExprAst"
    lo: Fraction
    hi: Fraction
    pos: int = field(compare=False, default=0)


ExprAst = Union[
    RationalLit,
    VarT,
    VarX,
    ExpSeries,
    UnifiedCall,
    PresetCall,
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Bracket,
    Apply,
    Shift,
    Integral,
]


# ---------------------------------------------------------------------------
# lexer


@dataclass(frozen=True)
class _Token:
    kind: str  # "number" | "name" | a literal symbol | "eof"
    text: str
    pos: int


_SYMBOLS = set("+-*/^()<>|,;=")


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("number", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i, ("token",))
    tokens.append(_Token("eof", "", n))
    return tokens


# ---------------------------------------------------------------------------
# parser

_CALL_NAMES = ("Y", "B", "E", "G", "apply", "shift", "integral")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def _clamp(self, pos: int) -> int:
        limit = max(0, len(self.text) - 1)
        return min(max(pos, 0), limit) if self.text else 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def fail(self, message: str, expected: tuple[str, ...], tok: Optional[_Token] = None):
        tok = tok or self.peek()
        raise ExprSyntaxError(message, self._clamp(tok.pos), expected)

    def expect(self, kind: str, what: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            self.fail(f"expected {what}", (kind,), tok)
        return self.advance()

    # entry -----------------------------------------------------------------

    def parse(self) -> ExprAst:
        node = self.parse_expr()
        tok = self.peek()
        if tok.kind != "eof":
            self.fail("trailing input after a complete expression", ("eof",), tok)
        return node

    def parse_expr(self) -> ExprAst:
        if self.peek().kind == "<":
            opener = self.advance()
            left = self.parse_sum()
            self.expect("|", "'|' between the series and polynomial sides")
            right = self.parse_sum()
            self.expect(">", "'>' closing the bracket")
            return Bracket(left, right, opener.pos)
        return self.parse_sum()

    def parse_sum(self) -> ExprAst:
        node = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            rhs = self.parse_term()
            node = Add(node, rhs, op.pos) if op.kind == "+" else Sub(node, rhs, op.pos)
        return node

    def parse_term(self) -> ExprAst:
        node = self.parse_factor()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            rhs = self.parse_factor()
            node = Mul(node, rhs, op.pos) if op.kind == "*" else Div(node, rhs, op.pos)
        return node

    def parse_factor(self) -> ExprAst:
        tok = self.peek()
        if tok.kind == "-":
            self.advance()
            inner = self.parse_factor()
            if isinstance(inner, RationalLit):
                return RationalLit(-inner.value, tok.pos)
            return Neg(inner, tok.pos)
        node = self.parse_atom()
        if self.peek().kind == "^":
            caret = self.advance()
            exp_tok = self.expect("number", "a nonnegative integer exponent")
            node = Pow(node, int(exp_tok.text), caret.pos)
        return node

    def parse_atom(self) -> ExprAst:
        tok = self.peek()
        if tok.kind == "number":
            self.advance()
            value = Fraction(int(tok.text))
            # fold NUM "/" NUM into one literal unless the denominator is powered
            if (
                self.peek().kind == "/"
                and self.tokens[self.index + 1].kind == "number"
                and self.tokens[self.index + 2].kind != "^"
            ):
                self.advance()
                den_tok = self.advance()
                den = int(den_tok.text)
                if den == 0:
                    self.fail("zero denominator in a rational literal", ("nonzero",), den_tok)
                value = Fraction(int(tok.text), den)
            return RationalLit(value, tok.pos)
        if tok.kind == "name":
            if tok.text == "t":
                self.advance()
                return VarT(tok.pos)
            if tok.text == "x":
                self.advance()
                return VarX(tok.pos)
            if tok.text == "exp":
                return self.parse_exp()
            if tok.text in _CALL_NAMES:
                return self.parse_call()
            self.fail(
                f"unknown name {tok.text!r}",
                ("t", "x", "exp") + _CALL_NAMES,
                tok,
            )
        if tok.kind == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")", "')'")
            return node
        self.fail("expected a value", ("number", "name", "("), tok)
        raise AssertionError("unreachable")

    def parse_signed_rational(self) -> Fraction:
        negative = False
        if self.peek().kind == "-":
            self.advance()
            negative = True
        num_tok = self.expect("number", "an integer")
        value = Fraction(int(num_tok.text))
        if self.peek().kind == "/":
            self.advance()
            den_tok = self.expect("number", "a denominator")
            if int(den_tok.text) == 0:
                self.fail("zero denominator", ("nonzero",), den_tok)
            value = Fraction(int(num_tok.text), int(den_tok.text))
        return -value if negative else value

    def parse_nat(self, what: str) -> int:
        tok = self.expect("number", what)
        return int(tok.text)

    def parse_exp(self) -> ExprAst:
        name = self.advance()
        self.expect("(", "'(' after exp")
        rate = self.parse_signed_rational()
        self.expect("*", "'*' between the rate and t")
        t_tok = self.expect("name", "the series variable t")
        if t_tok.text != "t":
            self.fail("exp takes an argument of the form rational * t", ("t",), t_tok)
        self.expect(")", "')'")
        return ExpSeries(rate, name.pos)

    def parse_call(self) -> ExprAst:
        name = self.advance()
        self.expect("(", f"'(' after {name.text}")
        if name.text == "Y":
            n = self.parse_nat("the index n")
            self.expect(";", "';' before the keyword arguments")
            seen: dict[str, Fraction] = {}
            while True:
                key_tok = self.expect("name", "a keyword (k, v, L or A)")
                if key_tok.text not in ("k", "v", "L", "A"):
                    self.fail("keywords are k, v, L and A", ("k", "v", "L", "A"), key_tok)
                if key_tok.text in seen:
                    self.fail(f"duplicate keyword {key_tok.text}", (), key_tok)
                self.expect("=", "'='")
                if key_tok.text in ("k", "v"):
                    seen[key_tok.text] = Fraction(self.parse_nat("a nonnegative integer"))
                else:
                    seen[key_tok.text] = self.parse_signed_rational()
                if self.peek().kind == ",":
                    self.advance()
                    continue
                break
            closer = self.peek()
            self.expect(")", "')'")
            missing = [k for k in ("k", "v", "L", "A") if k not in seen]
            if missing:
                self.fail(f"missing keywords: {', '.join(missing)}", tuple(missing), closer)
            return UnifiedCall(
                n, int(seen["k"]), int(seen["v"]), seen["L"], seen["A"], name.pos
            )
        if name.text in ("B", "E", "G"):
            n = self.parse_nat("the index n")
            self.expect(")", "')'")
            return PresetCall(name.text, n, name.pos)
        if name.text == "apply":
            series = self.parse_expr()
            self.expect(",", "','")
            poly = self.parse_expr()
            self.expect(")", "')'")
            return Apply(series, poly, name.pos)
        if name.text == "shift":
            target = self.parse_expr()
            self.expect(",", "','")
            offset = self.parse_signed_rational()
            self.expect(")", "')'")
            return Shift(target, offset, name.pos)
        if name.text == "integral":
            target = self.parse_expr()
            self.expect(",", "','")
            lo = self.parse_signed_rational()
            self.expect(",", "','")
            hi = self.parse_signed_rational()
            self.expect(")", "')'")
            return Integral(target, lo, hi, name.pos)
        raise AssertionError("unreachable call name")


# ---------------------------------------------------------------------------
# type analysis

SCALAR, SERIES, POLY = "scalar", "series", "poly"

_KIND_NOUN = {SERIES: "a series", POLY: "a polynomial"}


def _combine(left: tuple[str, int], right: tuple[str, int]) -> tuple[str, int]:
    lk, lpin = left
    rk, rpin = right
    if lk == SCALAR:
        return right
    if rk == SCALAR or lk == rk:
        return left
    raise ExprTypeError(
        f"{_KIND_NOUN[rk]} cannot appear in {_KIND_NOUN[lk]} context", rpin
    )


def analyze(node: ExprAst) -> str:
    """Infer scalar/series/poly for a subtree, raising ExprTypeError on conflicts."""
    return _analyze(node)[0]


def _analyze(node: ExprAst) -> tuple[str, int]:
    if isinstance(node, RationalLit):
        return (SCALAR, node.pos)
    if isinstance(node, VarT):
        return (SERIES, node.pos)
    if isinstance(node, ExpSeries):
        return (SERIES, node.pos)
    if isinstance(node, VarX):
        return (POLY, node.pos)
    if isinstance(node, (UnifiedCall, PresetCall)):
        return (POLY, node.pos)
    if isinstance(node, Neg):
        return _analyze(node.item)
    if isinstance(node, (Add, Sub, Mul)):
        return _combine(_analyze(node.left), _analyze(node.right))
    if isinstance(node, Div):
        left = _analyze(node.left)
        right = _analyze(node.right)
        if left[0] == POLY or right[0] == POLY:
            pin = left[1] if left[0] == POLY else right[1]
            raise ExprTypeError("division is not defined in polynomial context", pin)
        if left[0] == SCALAR and right[0] == SCALAR:
            return left
        return (SERIES, left[1] if left[0] == SERIES else right[1])
    if isinstance(node, Pow):
        return _analyze(node.base)
    if isinstance(node, Bracket) or isinstance(node, Apply):
        skind, spin = _analyze(node.series)
        pkind, ppin = _analyze(node.poly)
        if skind == POLY:
            raise ExprTypeError(
                "the left side of a pairing must be a series", spin
            )
        if pkind == SERIES:
            raise ExprTypeError(
                "the right side of a pairing must be a polynomial", ppin
            )
        return (SCALAR, node.pos) if isinstance(node, Bracket) else (POLY, node.pos)
    if isinstance(node, Shift):
        kind, pin = _analyze(node.target)
        if kind == SERIES:
            raise ExprTypeError("shift acts on polynomials", pin)
        return (POLY, node.pos)
    if isinstance(node, Integral):
        kind, pin = _analyze(node.target)
        if kind == SERIES:
            raise ExprTypeError("integral acts on polynomials", pin)
        return (SCALAR, node.pos)
    raise AssertionError(f"unhandled node {node!r}")


# ---------------------------------------------------------------------------
# evaluation


def parse(text: str) -> ExprAst:
    """Parse and type-check an expression."""
    node = _Parser(text).parse()
    _analyze(node)
    return node


def _wrap_engine_error(exc: EngineError, pos: int):
    raise ExprEvaluationError(str(exc), pos) from exc


def _eval_scalar(node: ExprAst, precision: int) -> Fraction:
    if isinstance(node, RationalLit):
        return node.value
    if isinstance(node, Neg):
        return -_eval_scalar(node.item, precision)
    if isinstance(node, Add):
        return _eval_scalar(node.left, precision) + _eval_scalar(node.right, precision)
    if isinstance(node, Sub):
        return _eval_scalar(node.left, precision) - _eval_scalar(node.right, precision)
    if isinstance(node, Mul):
        return _eval_scalar(node.left, precision) * _eval_scalar(node.right, precision)
    if isinstance(node, Div):
        den = _eval_scalar(node.right, precision)
        if den == 0:
            raise ExprEvaluationError("division by zero", node.pos)
        return _eval_scalar(node.left, precision) / den
    if isinstance(node, Pow):
        return _eval_scalar(node.base, precision) ** node.exponent
    if isinstance(node, Bracket):
        f = _eval_series(node.series, precision)
        p = _eval_poly(node.poly, precision)
        try:
            return functional_apply(f, p)
        except EngineError as exc:
            _wrap_engine_error(exc, node.pos)
    if isinstance(node, Integral):
        p = _eval_poly(node.target, precision)
        return p.definite_integral(node.lo, node.hi)
    raise AssertionError(f"not a scalar node: {node!r}")


def _eval_series(node: ExprAst, precision: int) -> TruncatedSeries:
    kind = analyze(node)
    if kind == SCALAR:
        return TruncatedSeries.constant(_eval_scalar(node, precision), precision)
    if isinstance(node, VarT):
        return TruncatedSeries.t_power(1, precision)
    if isinstance(node, ExpSeries):
        return TruncatedSeries.exp_linear(node.rate, precision)
    if isinstance(node, Neg):
        return -_eval_series(node.item, precision)
    if isinstance(node, Add):
        return _eval_series(node.left, precision) + _eval_series(node.right, precision)
    if isinstance(node, Sub):
        return _eval_series(node.left, precision) - _eval_series(node.right, precision)
    if isinstance(node, Mul):
        return _eval_series(node.left, precision) * _eval_series(node.right, precision)
    if isinstance(node, Div):
        num = _eval_series(node.left, precision)
        den = _eval_series(node.right, precision)
        try:
            return num.divided_by(den)
        except EngineError as exc:
            _wrap_engine_error(exc, node.pos)
    if isinstance(node, Pow):
        return _eval_series(node.base, precision) ** node.exponent
    raise AssertionError(f"not a series node: {node!r}")


def _eval_poly(node: ExprAst, precision: int) -> Polynomial:
    kind = analyze(node)
    if kind == SCALAR:
        return Polynomial.constant(_eval_scalar(node, precision))
    if isinstance(node, VarX):
        return Polynomial.x_power(1)
    if isinstance(node, UnifiedCall):
        try:
            params = UnifiedParams(node.k, node.v, node.lam, node.alpha)
            return unified_polynomials(params, node.n)[node.n]
        except (EngineError, ValueError) as exc:
            raise ExprEvaluationError(str(exc), node.pos) from exc
    if isinstance(node, PresetCall):
        if node.family == "B":
            params = UnifiedParams(1, 1, Fraction(1), Fraction(1))
            factor = Fraction(1)
        elif node.family == "E":
            params = UnifiedParams(0, 1, Fraction(1), Fraction(-1))
            factor = Fraction(1)
        else:
            params = UnifiedParams(1, 1, Fraction(1), Fraction(-1))
            factor = Fraction(2)
        return unified_polynomials(params, node.n)[node.n] * factor
    if isinstance(node, Neg):
        return -_eval_poly(node.item, precision)
    if isinstance(node, Add):
        return _eval_poly(node.left, precision) + _eval_poly(node.right, precision)
    if isinstance(node, Sub):
        return _eval_poly(node.left, precision) - _eval_poly(node.right, precision)
    if isinstance(node, Mul):
        return _eval_poly(node.left, precision) * _eval_poly(node.right, precision)
    if isinstance(node, Pow):
        return _eval_poly(node.base, precision) ** node.exponent
    if isinstance(node, Apply):
        f = _eval_series(node.series, precision)
        p = _eval_poly(node.poly, precision)
        try:
            return operator_apply(f, p)
        except EngineError as exc:
            _wrap_engine_error(exc, node.pos)
    if isinstance(node, Shift):
        return _eval_poly(node.target, precision).shifted(node.offset)
    raise AssertionError(f"not a polynomial node: {node!r}")


def evaluate(
    node: ExprAst, precision: int = DEFAULT_PRECISION
) -> Union[Fraction, Polynomial, TruncatedSeries]:
    """Evaluate a type-checked AST.

    Scalar expressions give a Fraction, polynomial expressions a
    Polynomial, series expressions a TruncatedSeries at the requested
    precision (the series result is a convenience for inspecting
    generating functions from the command line).
    """
    kind = analyze(node)
    if kind == SCALAR:
        return _eval_scalar(node, precision)
    if kind == POLY:
        return _eval_poly(node, precision)
    return _eval_series(node, precision)


def evaluate_text(
    text: str, precision: int = DEFAULT_PRECISION
) -> Union[Fraction, Polynomial, TruncatedSeries]:
    return evaluate(parse(text), precision)


# ---------------------------------------------------------------------------
# rendering (canonical text; parse(render(parse(s))) == parse(s))

_LEVEL_EXPR, _LEVEL_SUM, _LEVEL_TERM, _LEVEL_UNARY, _LEVEL_POW, _LEVEL_ATOM = range(6)


def render(node: ExprAst) -> str:
    return _render(node, _LEVEL_EXPR)


def _paren(text: str, level: int, minimum: int) -> str:
    return f"({text})" if level < minimum else text


def _render(node: ExprAst, minimum: int) -> str:
    if isinstance(node, RationalLit):
        # a fractional literal prints with "/" and binds like a term; a
        # negative one starts with "-" and binds like a unary factor
        text = str(node.value)
        if node.value.denominator != 1:
            level = _LEVEL_TERM
        elif node.value < 0:
            level = _LEVEL_UNARY
        else:
            level = _LEVEL_ATOM
        return _paren(text, level, minimum)
    if isinstance(node, VarT):
        return "t"
    if isinstance(node, VarX):
        return "x"
    if isinstance(node, ExpSeries):
        return f"exp({node.rate}*t)"
    if isinstance(node, UnifiedCall):
        return (
            f"Y({node.n}; k={node.k}, v={node.v}, L={node.lam}, A={node.alpha})"
        )
    if isinstance(node, PresetCall):
        return f"{node.family}({node.n})"
    if isinstance(node, Neg):
        return _paren(f"-{_render(node.item, _LEVEL_UNARY)}", _LEVEL_UNARY, minimum)
    if isinstance(node, Add):
        text = f"{_render(node.left, _LEVEL_SUM)} + {_render(node.right, _LEVEL_TERM)}"
        return _paren(text, _LEVEL_SUM, minimum)
    if isinstance(node, Sub):
        text = f"{_render(node.left, _LEVEL_SUM)} - {_render(node.right, _LEVEL_TERM)}"
        return _paren(text, _LEVEL_SUM, minimum)
    if isinstance(node, Mul):
        text = f"{_render(node.left, _LEVEL_TERM)}*{_render(node.right, _LEVEL_UNARY)}"
        return _paren(text, _LEVEL_TERM, minimum)
    if isinstance(node, Div):
        # a literal denominator is parenthesized so it cannot fold back
        # into a single rational literal on re-parse
        if isinstance(node.right, RationalLit):
            right = f"({node.right.value})"
        else:
            right = _render(node.right, _LEVEL_UNARY)
        text = f"{_render(node.left, _LEVEL_TERM)}/{right}"
        return _paren(text, _LEVEL_TERM, minimum)
    if isinstance(node, Pow):
        text = f"{_render(node.base, _LEVEL_ATOM)}^{node.exponent}"
        return _paren(text, _LEVEL_POW, minimum)
    if isinstance(node, Bracket):
        # the grammar admits a bare bracket only as a whole expression; in
        # any operand position it must sit inside parentheses
        text = f"<{_render(node.series, _LEVEL_SUM)} | {_render(node.poly, _LEVEL_SUM)}>"
        return _paren(text, _LEVEL_EXPR, minimum)
    if isinstance(node, Apply):
        return f"apply({_render(node.series, _LEVEL_EXPR)}, {_render(node.poly, _LEVEL_EXPR)})"
    if isinstance(node, Shift):
        return f"shift({_render(node.target, _LEVEL_EXPR)}, {node.offset})"
    if isinstance(node, Integral):
        return f"integral({_render(node.target, _LEVEL_EXPR)}, {node.lo}, {node.hi})"
    raise AssertionError(f"unhandled node {node!r}")
