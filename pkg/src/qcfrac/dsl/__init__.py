"""A small language for writing q-series identities as text."""

from .ast import (BinOp, Const, IdentityFile, Monomial, NamedCF, Neg, Node, Poch, Pow, Special,
                  Statement, Theta, render, render_statement)
from .evaluate import DEFAULT_ORDER, FileReport, check_file, run_file, check_statement, evaluate, load
from .lexer import DSLError, DSLEvalError, DSLSyntaxError, Token, tokenize
from .parser import parse, parse_expression, parse_statement

__all__ = [
    "BinOp", "Const", "IdentityFile", "Monomial", "NamedCF", "Neg", "Node", "Poch", "Pow",
    "Special", "Statement", "Theta", "render", "render_statement", "DEFAULT_ORDER", "FileReport",
    "check_file", "run_file", "check_statement", "evaluate", "load", "DSLError", "DSLEvalError",
    "DSLSyntaxError", "Token", "tokenize", "parse", "parse_expression", "parse_statement",
]
