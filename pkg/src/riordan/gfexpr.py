"""A small expression language for generating functions.

Grammar (whitespace-insensitive, no implicit multiplication)::

    expr     := '-' expr | sum
    sum      := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := atom ['^' exponent]
    exponent := '-' exponent | INT ['^' exponent]
    atom     := INT | 'x' | 'sqrt' '(' expr ')' | 'c' '(' expr ')' | '(' expr ')'

A leading minus therefore negates the whole expression, and exponents are
integer literals (folded right-associatively at parse time).  ``c(e)`` is the
Catalan generating function composed with ``e``, which must have zero
constant term.  Rational constants are written as quotients of integers,
e.g. ``3/4``.

Division is valuation-aware: a common power of x is cancelled between
numerator and denominator first, so quotients like ``(1-sqrt(1-4*x))/(2*x)``
evaluate to honest power series.  Operands are re-evaluated with extra
working precision when that happens, so the result is still exact at the
requested order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import ExpressionEvalError, ExpressionSyntaxError, RiordanError
from .series import TruncatedSeries, catalan_gf


# ---------------------------------------------------------------------------
# syntax tree
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Lit:
    value: Fraction
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Var:
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Add:
    left: "GfExpression"
    right: "GfExpression"
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Sub:
    left: "GfExpression"
    right: "GfExpression"
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Mul:
    left: "GfExpression"
    right: "GfExpression"
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Div:
    left: "GfExpression"
    right: "GfExpression"
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Pow:
    base: "GfExpression"
    exponent: int
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class SqrtCall:
    arg: "GfExpression"
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class CatalanCall:
    arg: "GfExpression"
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Neg:
    arg: "GfExpression"
    pos: int = field(default=0, compare=False, repr=False)


GfExpression = Union[
    Lit, Var, Add, Sub, Mul, Div, Pow, SqrtCall, CatalanCall, Neg
]


# ---------------------------------------------------------------------------
# lexer / parser
# ---------------------------------------------------------------------------

_SYMBOLS = set("+-*/^()")


@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "ident", one of the symbols, or "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("ident", text[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ExpressionSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self._tokens = tokens
        self._i = 0

    @property
    def _tok(self) -> _Token:
        return self._tokens[self._i]

    def _advance(self) -> _Token:
        tok = self._tokens[self._i]
        self._i += 1
        return tok

    def _expect(self, kind: str, what: str) -> _Token:
        if self._tok.kind != kind:
            raise ExpressionSyntaxError(f"expected {what}", self._tok.pos)
        return self._advance()

    def parse(self) -> GfExpression:
        node = self._expr()
        if self._tok.kind != "end":
            raise ExpressionSyntaxError("unexpected trailing input", self._tok.pos)
        return node

    def _expr(self) -> GfExpression:
        if self._tok.kind == "-":
            minus = self._advance()
            return Neg(self._expr(), pos=minus.pos)
        return self._sum()

    def _sum(self) -> GfExpression:
        node = self._term()
        while self._tok.kind in ("+", "-"):
            op = self._advance()
            rhs = self._term()
            node = Add(node, rhs, pos=op.pos) if op.kind == "+" else Sub(node, rhs, pos=op.pos)
        return node

    def _term(self) -> GfExpression:
        node = self._factor()
        while self._tok.kind in ("*", "/"):
            op = self._advance()
            rhs = self._factor()
            node = Mul(node, rhs, pos=op.pos) if op.kind == "*" else Div(node, rhs, pos=op.pos)
        return node

    def _factor(self) -> GfExpression:
        node = self._atom()
        if self._tok.kind == "^":
            caret = self._advance()
            return Pow(node, self._exponent(), pos=caret.pos)
        return node

    def _exponent(self) -> int:
        if self._tok.kind == "-":
            self._advance()
            return -self._exponent()
        tok = self._expect("int", "an integer exponent")
        value = int(tok.text)
        if self._tok.kind == "^":
            self._advance()
            rest = self._exponent()
            if rest < 0:
                raise ExpressionSyntaxError(
                    "nested exponent must be non-negative", tok.pos
                )
            value = value**rest
        return value

    def _atom(self) -> GfExpression:
        tok = self._tok
        if tok.kind == "int":
            self._advance()
            return Lit(Fraction(int(tok.text)), pos=tok.pos)
        if tok.kind == "ident":
            self._advance()
            if tok.text == "x":
                return Var(pos=tok.pos)
            if tok.text in ("sqrt", "c"):
                self._expect("(", f"'(' after {tok.text}")
                arg = self._expr()
                self._expect(")", "')'")
                cls = SqrtCall if tok.text == "sqrt" else CatalanCall
                return cls(arg, pos=tok.pos)
            raise ExpressionSyntaxError(f"unknown identifier '{tok.text}'", tok.pos)
        if tok.kind == "(":
            self._advance()
            node = self._expr()
            self._expect(")", "')'")
            return node
        if tok.kind == "end":
            raise ExpressionSyntaxError("unexpected end of input", tok.pos)
        raise ExpressionSyntaxError(f"unexpected {tok.text!r}", tok.pos)


def parse(text: str) -> GfExpression:
    """Parse expression text into a syntax tree."""
    return _Parser(_tokenize(text)).parse()


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def evaluate(expr: GfExpression, order: int) -> TruncatedSeries:
    """Evaluate a syntax tree to an exact series at the given order."""
    if order < 0:
        raise ValueError("order must be non-negative")
    return _eval(expr, order)


def evaluate_text(text: str, order: int) -> TruncatedSeries:
    return evaluate(parse(text), order)


def _eval(node: GfExpression, order: int) -> TruncatedSeries:
    if isinstance(node, Lit):
        return TruncatedSeries.constant(node.value, order)
    if isinstance(node, Var):
        return TruncatedSeries.x(order)
    if isinstance(node, Neg):
        return -_eval(node.arg, order)
    if isinstance(node, Add):
        return _eval(node.left, order) + _eval(node.right, order)
    if isinstance(node, Sub):
        return _eval(node.left, order) - _eval(node.right, order)
    if isinstance(node, Mul):
        return _eval(node.left, order) * _eval(node.right, order)
    if isinstance(node, Div):
        return _eval_div(node, order)
    if isinstance(node, Pow):
        base = _eval(node.base, order)
        with _positioned(node.pos):
            return base**node.exponent
    if isinstance(node, SqrtCall):
        arg = _eval(node.arg, order)
        with _positioned(node.pos):
            return arg.sqrt()
    if isinstance(node, CatalanCall):
        arg = _eval(node.arg, order)
        with _positioned(node.pos):
            return catalan_gf(order).compose(arg)
    raise TypeError(f"not a GfExpression node: {node!r}")


def _eval_div(node: Div, order: int) -> TruncatedSeries:
    den = _eval(node.right, order)
    if den.is_zero():
        raise ExpressionEvalError("division by a zero series", node.pos)
    shift = den.valuation()
    if shift == 0:
        num = _eval(node.left, order)
        return num / den
    # cancel x^shift from both sides; re-evaluate with enough working
    # precision that the result is exact at the requested order
    num = _eval(node.left, order + shift)
    den = _eval(node.right, order + shift)
    for i in range(shift):
        if num.coefficient(i):
            raise ExpressionEvalError(
                f"numerator must be divisible by x^{shift} to match the "
                "denominator's leading power of x",
                node.pos,
            )
    return num.shift_down(shift) / den.shift_down(shift)


class _positioned:
    """Re-raise kernel series errors as expression errors with an offset."""

    def __init__(self, pos: int):
        self._pos = pos

    def __enter__(self) -> None:
        return None

    def __exit__(self, exc_type, exc, tb):
        if exc is not None and isinstance(exc, RiordanError) and not isinstance(
            exc, ExpressionEvalError
        ):
            raise ExpressionEvalError(str(exc), self._pos) from exc
        return False


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

_LEVEL_NEG = 0
_LEVEL_SUM = 1
_LEVEL_TERM = 2
_LEVEL_POW = 3
_LEVEL_ATOM = 4


def to_text(expr: GfExpression) -> str:
    """Render a tree back to source text; ``parse(to_text(e))`` is
    structurally equal to ``e`` for any parser-produced tree."""
    return _fmt(expr, _LEVEL_NEG)


def _fmt(node: GfExpression, min_level: int) -> str:
    text, level = _render(node)
    if level < min_level:
        return f"({text})"
    return text


def _render(node: GfExpression) -> tuple[str, int]:
    if isinstance(node, Lit):
        if node.value.denominator == 1 and node.value >= 0:
            return str(node.value.numerator), _LEVEL_ATOM
        return str(node.value), _LEVEL_NEG  # signed/fractional: always parenthesized
    if isinstance(node, Var):
        return "x", _LEVEL_ATOM
    if isinstance(node, Neg):
        return "-" + _fmt(node.arg, _LEVEL_NEG), _LEVEL_NEG
    if isinstance(node, Add):
        return (
            _fmt(node.left, _LEVEL_SUM) + "+" + _fmt(node.right, _LEVEL_TERM),
            _LEVEL_SUM,
        )
    if isinstance(node, Sub):
        return (
            _fmt(node.left, _LEVEL_SUM) + "-" + _fmt(node.right, _LEVEL_TERM),
            _LEVEL_SUM,
        )
    if isinstance(node, Mul):
        return (
            _fmt(node.left, _LEVEL_TERM) + "*" + _fmt(node.right, _LEVEL_POW),
            _LEVEL_TERM,
        )
    if isinstance(node, Div):
        return (
            _fmt(node.left, _LEVEL_TERM) + "/" + _fmt(node.right, _LEVEL_POW),
            _LEVEL_TERM,
        )
    if isinstance(node, Pow):
        return _fmt(node.base, _LEVEL_ATOM) + "^" + str(node.exponent), _LEVEL_POW
    if isinstance(node, SqrtCall):
        return "sqrt(" + _fmt(node.arg, _LEVEL_NEG) + ")", _LEVEL_ATOM
    if isinstance(node, CatalanCall):
        return "c(" + _fmt(node.arg, _LEVEL_NEG) + ")", _LEVEL_ATOM
    raise TypeError(f"not a GfExpression node: {node!r}")
