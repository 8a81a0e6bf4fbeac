"""Expression AST, parser, printer, calculus, and structure normalization."""

from .nodes import (
    Add,
    Call,
    Expression,
    FunctionKind,
    FUNCTIONS,
    Mul,
    NamedConstant,
    Neg,
    Number,
    Placeholder,
    Pow,
    Variable,
    add,
    mul,
)
from .parser import ExprSyntaxError, ParseDiagnostic, ParseOutcome, parse, try_parse
from .printer import print_expr
from .simplify import simplify
from .canonical import canonicalize
from .derivative import differentiate
from .slots import free_constants, with_constants

X = Variable("x")
Y = Variable("y")

__all__ = [
    "Add",
    "Call",
    "Expression",
    "ExprSyntaxError",
    "FunctionKind",
    "FUNCTIONS",
    "Mul",
    "NamedConstant",
    "Neg",
    "Number",
    "ParseDiagnostic",
    "ParseOutcome",
    "Placeholder",
    "Pow",
    "Variable",
    "X",
    "Y",
    "add",
    "canonicalize",
    "differentiate",
    "free_constants",
    "mul",
    "parse",
    "print_expr",
    "simplify",
    "try_parse",
    "with_constants",
]
