"""Expression tree of the identity language and its canonical renderer."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

Pos = Optional[Tuple[int, int]]


@dataclass(frozen=True)
class Node:
    pass


@dataclass(frozen=True)
class Const(Node):
    value: int
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class Monomial(Node):
    sign: int
    exp: Fraction
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class Theta(Node):
    a: Monomial
    b: Monomial
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class Special(Node):
    """phi, psi, chi or fneg applied to a signed monomial."""
    func: str
    arg: Monomial
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class Poch(Node):
    args: Tuple[Monomial, ...]
    base: Monomial
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class NamedCF(Node):
    name: str
    arg: Monomial
    form: str = "product"
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exp: int
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class Neg(Node):
    operand: Node
    pos: Pos = field(default=None, compare=False)


@dataclass(frozen=True)
class Statement:
    lhs: Node
    rhs: Node
    label: Optional[str] = None
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class IdentityFile:
    statements: Tuple[Statement, ...]
    order: Optional[int] = None
    scale: Optional[int] = None


def _frac(e: Fraction) -> str:
    return str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"


def render(node: Node) -> str:
    """Fully parenthesized source text that parses back to the same tree."""
    if isinstance(node, Const):
        return str(node.value)
    if isinstance(node, Monomial):
        return ("-" if node.sign < 0 else "") + "q^" + _frac(node.exp)
    if isinstance(node, Theta):
        return f"f({render(node.a)}, {render(node.b)})"
    if isinstance(node, Special):
        return f"{node.func}({render(node.arg)})"
    if isinstance(node, Poch):
        return "poch(%s; %s)" % (", ".join(render(a) for a in node.args), render(node.base))
    if isinstance(node, NamedCF):
        if node.form == "product" and node.arg == Monomial(1, Fraction(1)):
            return node.name
        if node.form == "product":
            return f"{node.name}({render(node.arg)})"
        return f"{node.name}({render(node.arg)}, {node.form})"
    if isinstance(node, BinOp):
        return f"({render(node.left)} {node.op} {render(node.right)})"
    if isinstance(node, Pow):
        return f"({render(node.base)})^{node.exp}"
    if isinstance(node, Neg):
        return f"-({render(node.operand)})"
    raise TypeError(f"not an expression node: {node!r}")


def render_statement(stmt: Statement) -> str:
    text = f"{render(stmt.lhs)} == {render(stmt.rhs)};"
    if stmt.label:
        text = f"#label {stmt.label}\n{text}"
    return text
