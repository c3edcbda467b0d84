"""Recursive-descent parser for the identity language.

    file      := directive* stmt*
    directive := '#order' INT | '#scale' INT | '#label' TEXT
    stmt      := expr '==' expr ';'
    expr      := term (('+' | '-') term)*
    term      := unary (('*' | '/') unary)*
    unary     := '-' unary | power
    power     := atom ('^' '-'? INT)?
    atom      := INT | mono | call | '(' expr ')'
    mono      := 'q' ('^' frac)?
    frac      := '-'? INT ('/' INT)?          (no spaces inside a fraction)
    call      := f(m, m) | phi(m) | psi(m) | chi(m) | fneg(m)
               | poch(m, ...; m) | NAME | NAME '(' m (',' FORM)? ')'
    m         := '-'? ('q' ('^' frac)? | '1')

A bare number k as the argument of phi, psi, chi or fneg stands for q^k.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

from ..cfrac import NAMES
from .ast import (BinOp, Const, IdentityFile, Monomial, NamedCF, Neg, Node, Poch, Pow,
                  Special, Statement, Theta)
from .lexer import DSLSyntaxError, Token, tokenize

SPECIALS = ("phi", "psi", "chi", "fneg")
FORMS = ("product", "cf")
MONO_ERROR = "theta argument must be a signed monomial"
MAX_DEPTH = 100


class Parser:
    def __init__(self, tokens: Sequence[Token]):
        self.tokens = list(tokens)
        last = self.tokens[-1].position if self.tokens else (1, 1)
        self.tokens.append(Token("EOF", "", (last[0], last[1] + 1)))
        self.i = 0
        self.depth = 0

    # -- token helpers --

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def fail(self, expected: Sequence[str], message: Optional[str] = None):
        t = self.tok
        found = "end of input" if t.kind == "EOF" else repr(t.lexeme)
        exp = ", ".join(sorted(set(expected)))
        raise DSLSyntaxError(message or f"expected {exp}; found {found}", t.position)

    def expect(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.fail([kind])
        return self.advance()

    def adjacent(self, a: Token, b: Token) -> bool:
        return a.position[0] == b.position[0] and a.end_column == b.position[1]

    # -- grammar --

    def parse_file(self) -> IdentityFile:
        order = scale = None
        label = None
        statements = []
        while self.tok.kind != "EOF":
            if self.tok.kind == "DIRECTIVE":
                d = self.advance()
                if d.lexeme == "#label":
                    if self.tok.kind != "LABEL":
                        self.fail(["LABEL"])
                    label = self.advance().lexeme
                    continue
                if statements:
                    raise DSLSyntaxError(f"{d.lexeme} must precede all statements", d.position)
                value = int(self.expect("INT").lexeme)
                if value < 1:
                    raise DSLSyntaxError(f"{d.lexeme} needs a positive integer", d.position)
                if d.lexeme == "#order":
                    order = value
                else:
                    scale = value
                continue
            statements.append(self.parse_statement(label))
            label = None
        return IdentityFile(tuple(statements), order, scale)

    def parse_statement(self, label: Optional[str] = None) -> Statement:
        line = self.tok.position[0]
        lhs = self.parse_expr()
        self.expect_any(["EQEQ", "PLUS", "MINUS", "STAR", "SLASH", "CARET"], "EQEQ")
        rhs = self.parse_expr()
        self.expect_any(["SEMI", "PLUS", "MINUS", "STAR", "SLASH", "CARET"], "SEMI")
        return Statement(lhs, rhs, label, line)

    def expect_any(self, expected: List[str], kind: str) -> Token:
        """Expect ``kind`` but report every token that could have continued the input."""
        if self.tok.kind != kind:
            self.fail(expected)
        return self.advance()

    def parse_expr(self) -> Node:
        node = self.parse_term()
        while self.tok.kind in ("PLUS", "MINUS"):
            op = self.advance()
            node = BinOp(op.lexeme, node, self.parse_term(), op.position)
        return node

    def parse_term(self) -> Node:
        node = self.parse_unary()
        while self.tok.kind in ("STAR", "SLASH"):
            op = self.advance()
            node = BinOp(op.lexeme, node, self.parse_unary(), op.position)
        return node

    def nest(self, t: Token) -> None:
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise DSLSyntaxError(f"expression nested deeper than {MAX_DEPTH} levels", t.position)

    def parse_unary(self) -> Node:
        if self.tok.kind == "MINUS":
            op = self.advance()
            self.nest(op)
            inner = self.parse_unary()
            self.depth -= 1
            if isinstance(inner, Monomial):
                return Monomial(-inner.sign, inner.exp, op.position)
            if isinstance(inner, Const):
                return Const(-inner.value, op.position)
            return Neg(inner, op.position)
        return self.parse_power()

    def parse_power(self) -> Node:
        node = self.parse_atom()
        if self.tok.kind == "CARET":
            caret = self.advance()
            sign = 1
            if self.tok.kind == "MINUS":
                self.advance()
                sign = -1
            n = int(self.expect_any(["INT", "MINUS"], "INT").lexeme)
            node = Pow(node, sign * n, caret.position)
        return node

    def parse_atom(self) -> Node:
        t = self.tok
        if t.kind == "INT":
            self.advance()
            return Const(int(t.lexeme), t.position)
        if t.kind == "Q":
            return self.parse_q()
        if t.kind == "LPAREN":
            self.advance()
            self.nest(t)
            node = self.parse_expr()
            self.expect_any(["RPAREN", "PLUS", "MINUS", "STAR", "SLASH", "CARET"], "RPAREN")
            self.depth -= 1
            return node
        if t.kind == "IDENT":
            return self.parse_call()
        self.fail(["INT", "Q", "LPAREN", "IDENT", "MINUS"])

    def parse_q(self) -> Monomial:
        t = self.expect("Q")
        if self.tok.kind == "CARET" and self.peek().kind in ("INT", "MINUS"):
            self.advance()
            return Monomial(1, self.parse_frac(), t.position)
        if self.tok.kind == "CARET":
            self.advance()
            self.fail(["INT", "MINUS"])
        return Monomial(1, Fraction(1), t.position)

    def parse_frac(self) -> Fraction:
        sign = 1
        if self.tok.kind == "MINUS":
            self.advance()
            sign = -1
        num = self.expect("INT")
        if (self.tok.kind == "SLASH" and self.peek().kind == "INT"
                and self.adjacent(num, self.tok) and self.adjacent(self.tok, self.peek())):
            self.advance()
            den = self.advance()
            if int(den.lexeme) == 0:
                raise DSLSyntaxError("zero denominator in exponent", den.position)
            return sign * Fraction(int(num.lexeme), int(den.lexeme))
        return Fraction(sign * int(num.lexeme))

    def parse_mono_arg(self, bare_exponent: bool = False) -> Monomial:
        """Signed monomial argument; '1' is q^0, or q^k for a bare k when ``bare_exponent``."""
        start = self.tok
        sign = 1
        if self.tok.kind == "MINUS":
            self.advance()
            sign = -1
        if self.tok.kind == "Q":
            m = self.parse_q()
            node = Monomial(sign, m.exp, start.position)
        elif self.tok.kind == "INT" and bare_exponent:
            node = Monomial(sign, self.parse_frac(), start.position)
        elif self.tok.kind == "INT" and self.tok.lexeme == "1":
            self.advance()
            node = Monomial(sign, Fraction(0), start.position)
        else:
            self.fail(["Q", "MINUS"], f"{MONO_ERROR}; found {self.tok.lexeme or 'end of input'!r}")
        if self.tok.kind not in ("COMMA", "RPAREN", "SEMI"):
            raise DSLSyntaxError(MONO_ERROR, start.position)
        return node

    def parse_call(self) -> Node:
        name = self.advance()
        word = name.lexeme
        if word in NAMES:
            if self.tok.kind != "LPAREN":
                return NamedCF(word, Monomial(1, Fraction(1)), "product", name.position)
            self.advance()
            arg = self.parse_mono_arg()
            form = "product"
            if self.tok.kind == "COMMA":
                self.advance()
                t = self.expect("IDENT")
                if t.lexeme not in FORMS:
                    raise DSLSyntaxError(f"form must be one of {FORMS}, not {t.lexeme!r}", t.position)
                form = t.lexeme
            self.expect_any(["COMMA", "RPAREN"], "RPAREN")
            return NamedCF(word, arg, form, name.position)
        if word == "f":
            self.expect("LPAREN")
            a = self.parse_mono_arg()
            self.expect("COMMA")
            b = self.parse_mono_arg()
            self.expect("RPAREN")
            return Theta(a, b, name.position)
        if word in SPECIALS:
            self.expect("LPAREN")
            arg = self.parse_mono_arg(bare_exponent=True)
            self.expect("RPAREN")
            return Special(word, arg, name.position)
        if word == "poch":
            self.expect("LPAREN")
            args = [self.parse_mono_arg()]
            while self.tok.kind == "COMMA":
                self.advance()
                args.append(self.parse_mono_arg())
            self.expect_any(["COMMA", "SEMI"], "SEMI")
            base = self.parse_mono_arg()
            self.expect("RPAREN")
            return Poch(tuple(args), base, name.position)
        known = ("f", "poch") + SPECIALS + NAMES
        raise DSLSyntaxError(f"unknown function {word!r}; expected one of {', '.join(known)}",
                             name.position)


def parse_expression(src: str) -> Node:
    p = Parser(tokenize(src))
    node = p.parse_expr()
    if p.tok.kind != "EOF":
        p.fail(["EOF", "PLUS", "MINUS", "STAR", "SLASH", "CARET"])
    return node


def parse_statement(src: str) -> Statement:
    p = Parser(tokenize(src))
    stmt = p.parse_statement()
    if p.tok.kind != "EOF":
        p.fail(["EOF"])
    return stmt


def parse(src: str) -> IdentityFile:
    return Parser(tokenize(src)).parse_file()
