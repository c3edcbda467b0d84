"""Evaluation of identity-language trees to truncated series."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

from ..cfrac import named_cf
from ..errors import QSeriesError, TruncationError
from ..identities import CheckResult, compare, evaluate_to
from ..series import LaurentSeries, RationalLike, as_rational
from ..theta import SignedMonomial, chi, f_neg, phi, pochhammer_multi, psi, theta_sum
from .ast import (BinOp, Const, IdentityFile, Monomial, NamedCF, Neg, Node, Poch, Pow, Special,
                  Statement, Theta, render)
from .lexer import DSLEvalError
from .parser import parse

DEFAULT_ORDER = 60

_SPECIAL = {"phi": phi, "psi": psi, "chi": chi, "fneg": f_neg}


def _mono(node: Monomial) -> SignedMonomial:
    return SignedMonomial(node.sign, node.exp)


def _finite(s: LaurentSeries, W: Fraction) -> LaurentSeries:
    # an exact polynomial with several terms has no exact inverse
    return s.truncate(W) if s.is_exact and len(s._pairs()) > 1 else s


def _eval(node: Node, W: Fraction) -> LaurentSeries:
    try:
        return _eval_inner(node, W)
    except DSLEvalError:
        raise
    except (QSeriesError, ValueError, ZeroDivisionError) as exc:
        raise DSLEvalError(f"{render(node)}: {exc}", getattr(node, "pos", None)) from exc


def _eval_inner(node: Node, W: Fraction) -> LaurentSeries:
    if isinstance(node, Const):
        return LaurentSeries({0: node.value})
    if isinstance(node, Monomial):
        return _mono(node).series()
    if isinstance(node, Theta):
        return theta_sum(_mono(node.a), _mono(node.b), W)
    if isinstance(node, Special):
        return _SPECIAL[node.func](_mono(node.arg), W)
    if isinstance(node, Poch):
        base = _mono(node.base)
        return pochhammer_multi([(_mono(a), base, 1) for a in node.args], W)
    if isinstance(node, NamedCF):
        k = node.arg.exp
        if k <= 0:
            raise DSLEvalError(f"{node.name} needs an argument q^k with k > 0", node.pos)
        s = named_cf(node.name, node.form, W / k).substitute_power(k)
        return s.substitute_negate() if node.arg.sign < 0 else s
    if isinstance(node, BinOp):
        a, b = _eval(node.left, W), _eval(node.right, W)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        return a * _finite(b, W).inverse()
    if isinstance(node, Pow):
        base = _eval(node.base, W)
        if node.exp < 0:
            base = _finite(base, W)
        return base ** node.exp
    if isinstance(node, Neg):
        return -_eval(node.operand, W)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node: Node, order: RationalLike = DEFAULT_ORDER) -> LaurentSeries:
    """Series of ``node`` certified below ``order`` (exact if the tree is a polynomial)."""
    order = as_rational(order)
    try:
        s = evaluate_to(lambda W: _eval(node, W), order)
    except TruncationError as exc:
        raise DSLEvalError(str(exc), getattr(node, "pos", None)) from exc
    return s if s.is_exact else s.truncate(order)


def check_statement(stmt: Statement, order: RationalLike, id: Optional[str] = None,
                    scale: Optional[int] = None) -> CheckResult:
    order = as_rational(order)
    lhs, rhs = evaluate(stmt.lhs, order), evaluate(stmt.rhs, order)
    if scale is not None:
        for side, s in (("left", lhs), ("right", rhs)):
            if scale % s.scale:
                raise DSLEvalError(f"{side} side lives on q^(1/{s.scale}), not on the pinned "
                                   f"grid q^(1/{scale})", (stmt.line, 1))
    return compare(id or stmt.label or f"line{stmt.line}", lhs, rhs, order)


@dataclass
class FileReport:
    source: IdentityFile
    order: Fraction
    results: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def load(path_or_text: Union[str, os.PathLike]) -> IdentityFile:
    """Parse a .qid file given by path, or source text directly."""
    text = str(path_or_text)
    if isinstance(path_or_text, os.PathLike) or ("\n" not in text and text.endswith(".qid")):
        with open(path_or_text, encoding="utf-8") as fh:
            text = fh.read()
    return parse(text)


def run_file(path_or_text, order: Optional[RationalLike] = None) -> FileReport:
    """Check every statement; ``order`` overrides the file's #order (default 60)."""
    source = load(path_or_text)
    if order is None:
        order = source.order if source.order is not None else DEFAULT_ORDER
    order = as_rational(order)
    results = [check_statement(s, order, scale=source.scale) for s in source.statements]
    return FileReport(source, order, results)


def check_file(path_or_text, order: Optional[RationalLike] = None) -> List[CheckResult]:
    """One CheckResult per statement of a .qid file or source text."""
    return run_file(path_or_text, order).results
