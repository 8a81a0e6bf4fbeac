"""Immutable expression AST over x, y, numeric constants, and a fixed function library.

Nodes are frozen dataclasses; structural equality is dataclass equality.
Add and Mul are n-ary (children >= 2) and never directly nest themselves:
use the `add`/`mul` smart constructors, which flatten.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class FunctionKind:
    name: str
    arity: int
    diff_rule: str
    kernel: str


# The closed function library. `airyai_prime` exists to close the library
# under differentiation (d/dz airyai = airyai_prime, d/dz airyai_prime = z*airyai).
FUNCTIONS: dict[str, FunctionKind] = {
    k.name: k
    for k in [
        FunctionKind("sin", 1, "sin", "sin"),
        FunctionKind("cos", 1, "cos", "cos"),
        FunctionKind("tan", 1, "tan", "tan"),
        FunctionKind("asin", 1, "asin", "asin"),
        FunctionKind("acos", 1, "acos", "acos"),
        FunctionKind("atan", 1, "atan", "atan"),
        FunctionKind("atan2", 2, "atan2", "atan2"),
        FunctionKind("exp", 1, "exp", "exp"),
        FunctionKind("log", 1, "log", "log"),
        FunctionKind("sqrt", 1, "sqrt", "sqrt"),
        FunctionKind("sinh", 1, "sinh", "sinh"),
        FunctionKind("cosh", 1, "cosh", "cosh"),
        FunctionKind("tanh", 1, "tanh", "tanh"),
        FunctionKind("Abs", 1, "abs", "abs"),
        FunctionKind("besselj", 2, "besselj", "besselj"),
        FunctionKind("bessely", 2, "bessely", "bessely"),
        FunctionKind("airyai", 1, "airyai", "airyai"),
        FunctionKind("airyai_prime", 1, "airyai_prime", "airyai_prime"),
    ]
}

NAMED_CONSTANT_VALUES = {"pi": math.pi, "E": math.e}


class Expression:
    """Base class for all AST nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Number(Expression):
    value: float

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))
        if not math.isfinite(self.value):
            raise ValueError("Number must be finite")


@dataclass(frozen=True)
class Variable(Expression):
    name: str

    def __post_init__(self):
        if self.name not in ("x", "y"):
            raise ValueError(f"unknown variable {self.name!r}")


@dataclass(frozen=True)
class NamedConstant(Expression):
    name: str

    def __post_init__(self):
        if self.name not in NAMED_CONSTANT_VALUES:
            raise ValueError(f"unknown named constant {self.name!r}")

    @property
    def value(self) -> float:
        return NAMED_CONSTANT_VALUES[self.name]


@dataclass(frozen=True)
class Placeholder(Expression):
    """The shared constant placeholder C used by canonical forms."""


@dataclass(frozen=True)
class Add(Expression):
    children: tuple[Expression, ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("Add requires >= 2 children")
        if any(isinstance(c, Add) for c in self.children):
            raise ValueError("Add children must not nest Add (use add())")


@dataclass(frozen=True)
class Mul(Expression):
    children: tuple[Expression, ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("Mul requires >= 2 children")
        if any(isinstance(c, Mul) for c in self.children):
            raise ValueError("Mul children must not nest Mul (use mul())")


@dataclass(frozen=True)
class Pow(Expression):
    base: Expression
    exponent: Expression


@dataclass(frozen=True)
class Neg(Expression):
    child: Expression


@dataclass(frozen=True)
class Call(Expression):
    fn: str
    args: tuple[Expression, ...]

    def __post_init__(self):
        kind = FUNCTIONS.get(self.fn)
        if kind is None:
            raise ValueError(f"unknown function {self.fn!r}")
        if len(self.args) != kind.arity:
            raise ValueError(
                f"{self.fn} expects {kind.arity} argument(s), got {len(self.args)}"
            )

    @property
    def kind(self) -> FunctionKind:
        return FUNCTIONS[self.fn]


def add(*terms: Expression) -> Expression:
    """Flattening n-ary sum constructor."""
    flat: list[Expression] = []
    for t in terms:
        if isinstance(t, Add):
            flat.extend(t.children)
        else:
            flat.append(t)
    if not flat:
        return Number(0.0)
    if len(flat) == 1:
        return flat[0]
    return Add(tuple(flat))


def mul(*factors: Expression) -> Expression:
    """Flattening n-ary product constructor."""
    flat: list[Expression] = []
    for f in factors:
        if isinstance(f, Mul):
            flat.extend(f.children)
        else:
            flat.append(f)
    if not flat:
        return Number(1.0)
    if len(flat) == 1:
        return flat[0]
    return Mul(tuple(flat))


def children_of(e: Expression) -> tuple[Expression, ...]:
    if isinstance(e, (Add, Mul)):
        return e.children
    if isinstance(e, Pow):
        return (e.base, e.exponent)
    if isinstance(e, Neg):
        return (e.child,)
    if isinstance(e, Call):
        return e.args
    return ()


def replace_children(e: Expression, new: tuple[Expression, ...]) -> Expression:
    if isinstance(e, Add):
        return add(*new)
    if isinstance(e, Mul):
        return mul(*new)
    if isinstance(e, Pow):
        return Pow(new[0], new[1])
    if isinstance(e, Neg):
        return Neg(new[0])
    if isinstance(e, Call):
        return Call(e.fn, new)
    return e


def is_integer_number(e: Expression) -> bool:
    return isinstance(e, Number) and float(e.value).is_integer()
