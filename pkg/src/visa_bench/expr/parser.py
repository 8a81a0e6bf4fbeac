"""Tokenizer and recursive-descent parser for the expression grammar.

Grammar (whitespace insignificant):

    expr   := term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := ('+'|'-') unary | power
    power  := atom ('**' unary)?          right-associative
    atom   := NUMBER | IDENT | IDENT '(' expr (',' expr)* ')' | '(' expr ')'

Identifiers are restricted to x, y, pi, E and the function library.
`a - b` parses to Add(a, Neg(b)); `a / b` to Mul(a, Pow(b, -1)); unary
minus on a numeric literal folds into a negative Number so that printed
negative constants round-trip structurally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .nodes import (
    Add,
    Call,
    Expression,
    FUNCTIONS,
    Mul,
    NamedConstant,
    Neg,
    Number,
    Pow,
    Variable,
    add,
    mul,
)


@dataclass(frozen=True)
class ParseDiagnostic:
    offset: int
    message: str
    token: str


@dataclass(frozen=True)
class ParseOutcome:
    """Exactly one of `expression` / `diagnostic` is set."""

    expression: Optional[Expression] = None
    diagnostic: Optional[ParseDiagnostic] = None

    @property
    def ok(self) -> bool:
        return self.expression is not None


class ExprSyntaxError(ValueError):
    def __init__(self, offset: int, message: str, token: str = ""):
        super().__init__(f"{message} at offset {offset}" + (f" ({token!r})" if token else ""))
        self.offset = offset
        self.message = message
        self.token = token


@dataclass(frozen=True)
class _Token:
    kind: str  # NUMBER | IDENT | OP | END
    text: str
    offset: int


_OPS = ("**", "+", "-", "*", "/", "(", ")", ",")


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit() or (c == "." and i + 1 < n and text[i + 1].isdigit()):
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == ".":
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            if j < n and text[j] in "eE":
                k = j + 1
                if k < n and text[k] in "+-":
                    k += 1
                if k < n and text[k].isdigit():
                    j = k
                    while j < n and text[j].isdigit():
                        j += 1
            tokens.append(_Token("NUMBER", text[i:j], i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("IDENT", text[i:j], i))
            i = j
            continue
        if text.startswith("**", i):
            tokens.append(_Token("OP", "**", i))
            i += 2
            continue
        if c in "+-*/(),":
            tokens.append(_Token("OP", c, i))
            i += 1
            continue
        raise ExprSyntaxError(i, "unexpected character", c)
    tokens.append(_Token("END", "", n))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        tok = self.peek()
        if tok.kind != "OP" or tok.text != op:
            raise ExprSyntaxError(tok.offset, f"expected {op!r}", tok.text)
        self.advance()

    def at_op(self, *ops: str) -> bool:
        tok = self.peek()
        return tok.kind == "OP" and tok.text in ops

    def parse_expr(self) -> Expression:
        terms = [self.parse_term()]
        while self.at_op("+", "-"):
            op = self.advance().text
            rhs = self.parse_term()
            terms.append(rhs if op == "+" else _negate(rhs))
        return add(*terms)

    def parse_term(self) -> Expression:
        factors = [self.parse_unary()]
        while self.at_op("*", "/"):
            op = self.advance().text
            rhs = self.parse_unary()
            factors.append(rhs if op == "*" else Pow(rhs, Number(-1.0)))
        return mul(*factors)

    def parse_unary(self) -> Expression:
        if self.at_op("+"):
            self.advance()
            return self.parse_unary()
        if self.at_op("-"):
            self.advance()
            return _negate(self.parse_unary())
        return self.parse_power()

    def parse_power(self) -> Expression:
        base = self.parse_atom()
        if self.at_op("**"):
            self.advance()
            return Pow(base, self.parse_unary())
        return base

    def parse_atom(self) -> Expression:
        tok = self.peek()
        if tok.kind == "NUMBER":
            self.advance()
            value = float(tok.text)
            if not math.isfinite(value):
                raise ExprSyntaxError(tok.offset, "non-finite numeric literal", tok.text)
            return Number(value)
        if tok.kind == "IDENT":
            self.advance()
            name = tok.text
            if self.at_op("("):
                return self.parse_call(name, tok.offset)
            if name in ("x", "y"):
                return Variable(name)
            if name in ("pi", "E"):
                return NamedConstant(name)
            if name in FUNCTIONS:
                raise ExprSyntaxError(tok.offset, "function call requires parentheses", name)
            raise ExprSyntaxError(tok.offset, "unknown identifier", name)
        if self.at_op("("):
            self.advance()
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        raise ExprSyntaxError(tok.offset, "expected a number, identifier, or '('", tok.text)

    def parse_call(self, name: str, offset: int) -> Expression:
        kind = FUNCTIONS.get(name)
        if kind is None:
            raise ExprSyntaxError(offset, "unknown function", name)
        self.expect_op("(")
        args = [self.parse_expr()]
        while self.at_op(","):
            self.advance()
            args.append(self.parse_expr())
        self.expect_op(")")
        if len(args) != kind.arity:
            raise ExprSyntaxError(
                offset, f"{name} expects {kind.arity} argument(s), got {len(args)}", name
            )
        if name in ("besselj", "bessely"):
            order = args[0]
            if not (isinstance(order, Number) and order.value.is_integer() and order.value >= 0):
                raise ExprSyntaxError(
                    offset, f"{name} order must be an integer literal >= 0", name
                )
        return Call(name, tuple(args))


def _negate(e: Expression) -> Expression:
    # Fold unary minus on literals so printed negative numbers round-trip.
    if isinstance(e, Number):
        return Number(-e.value)
    if isinstance(e, Neg):
        return e.child
    return Neg(e)


def parse(text: str) -> Expression:
    """Parse `text`, raising ExprSyntaxError with a byte offset on failure."""
    parser = _Parser(_tokenize(text))
    result = parser.parse_expr()
    tail = parser.peek()
    if tail.kind != "END":
        raise ExprSyntaxError(tail.offset, "unexpected trailing input", tail.text)
    return result


def try_parse(text: str) -> ParseOutcome:
    try:
        return ParseOutcome(expression=parse(text))
    except ExprSyntaxError as err:
        return ParseOutcome(diagnostic=ParseDiagnostic(err.offset, err.message, err.token))
