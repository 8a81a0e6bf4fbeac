"""Deterministic expression printer.

Fixed spacing (`a + b`, `a*b`, `a**b`), minimal parenthesization by
precedence, shortest round-trip rendering of numbers (integral values
print bare, e.g. `2`, not `2.0`). print(parse(print(e))) == print(e),
and parse(print(e)) is structurally identical to e for any tree produced
by the parser or the rewrite passes.
"""

from __future__ import annotations

from .nodes import (
    Add,
    Call,
    Expression,
    Mul,
    NamedConstant,
    Neg,
    Number,
    Placeholder,
    Pow,
    Variable,
)


def format_number(value: float) -> str:
    if float(value).is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(float(value))


def print_expr(e: Expression) -> str:
    return _render(e)


def _render(e: Expression) -> str:
    if isinstance(e, Number):
        return format_number(e.value)
    if isinstance(e, Variable):
        return e.name
    if isinstance(e, NamedConstant):
        return e.name
    if isinstance(e, Placeholder):
        return "C"
    if isinstance(e, Add):
        parts = [_render_term(e.children[0])]
        for child in e.children[1:]:
            if isinstance(child, Neg):
                parts.append(" - " + _render_term(child.child))
            else:
                parts.append(" + " + _render_term(child))
        return "".join(parts)
    if isinstance(e, Mul):
        return "*".join(_render_factor(c) for c in e.children)
    if isinstance(e, Neg):
        return "-" + _render_unary_operand(e.child)
    if isinstance(e, Pow):
        return _render_base(e.base) + "**" + _render_exponent(e.exponent)
    if isinstance(e, Call):
        return e.fn + "(" + ", ".join(_render(a) for a in e.args) + ")"
    raise TypeError(f"unprintable node {type(e).__name__}")


def _render_term(e: Expression) -> str:
    # A '+'-joined operand must parse as a single term.
    if isinstance(e, Add):
        return "(" + _render(e) + ")"
    return _render(e)


def _render_factor(e: Expression) -> str:
    # Mul factors are unaries in the grammar; only sums need parentheses.
    if isinstance(e, Add):
        return "(" + _render(e) + ")"
    return _render(e)


def _render_unary_operand(e: Expression) -> str:
    # "-a*b" parses as (-a)*b, so negated products and sums need parens.
    if isinstance(e, (Add, Mul)):
        return "(" + _render(e) + ")"
    return _render(e)


def _render_base(e: Expression) -> str:
    # Pow bases are atoms: literals, names, calls, or parenthesized exprs.
    if isinstance(e, Number) and e.value < 0:
        return "(" + _render(e) + ")"
    if isinstance(e, (Number, Variable, NamedConstant, Placeholder, Call)):
        return _render(e)
    return "(" + _render(e) + ")"


def _render_exponent(e: Expression) -> str:
    # Exponents are unaries: negation and nested powers bind, sums/products don't.
    if isinstance(e, (Add, Mul)):
        return "(" + _render(e) + ")"
    return _render(e)
