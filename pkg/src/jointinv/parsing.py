"""Scalar expression grammar: tokenizer, recursive-descent parser, lowering.

    expression := term (('+'|'-') term)*
    term       := factor (('*'|'/') factor)*
    factor     := base ('^' nonneg-int)?
    base       := integer | name | '(' expression ')' | '-' factor

There is no implicit multiplication.  Exponents must be nonnegative integer
literals.  Rational literals like "3/4" are ordinary division of integers.
Every error carries a 1-based line/column position.
"""

from __future__ import annotations

from typing import NamedTuple

from .context import VarContext
from .errors import ParseError
from .poly import Polynomial
from .ratfunc import RationalFunction

_OPS = set("+-*/^()")


class Token(NamedTuple):
    kind: str  # "int", "name", "op", "end"
    value: str
    line: int
    col: int


def tokenize(text):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _OPS:
            tokens.append(Token("op", ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("end", "", line, col))
    return tokens


# AST nodes are plain tuples:
#   ("int", value)           ("name", name, (line, col))
#   ("neg", node)            ("pow", node, exponent)
#   ("add"|"sub"|"mul", left, right)
#   ("div", left, right, (line, col))


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        tok = self.peek()
        if tok.kind == "op" and tok.value == op:
            return self.advance()
        raise ParseError(f"expected {op!r}", tok.line, tok.col)

    def parse(self):
        node = self.expression()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.value!r}", tok.line, tok.col)
        return node

    def expression(self):
        node = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.value in "+-":
                self.advance()
                rhs = self.term()
                node = ("add" if tok.value == "+" else "sub", node, rhs)
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.value in "*/":
                self.advance()
                rhs = self.factor()
                if tok.value == "*":
                    node = ("mul", node, rhs)
                else:
                    node = ("div", node, rhs, (tok.line, tok.col))
            else:
                return node

    def factor(self):
        node = self.base()
        tok = self.peek()
        if tok.kind == "op" and tok.value == "^":
            self.advance()
            etok = self.peek()
            if etok.kind != "int":
                raise ParseError(
                    "exponent must be a nonnegative integer literal",
                    etok.line,
                    etok.col,
                )
            self.advance()
            node = ("pow", node, int(etok.value))
        return node

    def base(self):
        tok = self.advance()
        if tok.kind == "int":
            return ("int", int(tok.value))
        if tok.kind == "name":
            return ("name", tok.value, (tok.line, tok.col))
        if tok.kind == "op" and tok.value == "(":
            node = self.expression()
            self.expect_op(")")
            return node
        if tok.kind == "op" and tok.value == "-":
            return ("neg", self.factor())
        raise ParseError(
            f"expected a value, found {tok.value!r}" if tok.kind != "end" else "unexpected end of input",
            tok.line,
            tok.col,
        )


def parse_expression(text):
    """Parse text into an AST without resolving names."""
    return _Parser(tokenize(text)).parse()


def lower(node, ctx: VarContext) -> RationalFunction:
    """Turn an AST into a canonical rational function over ctx."""
    kind = node[0]
    if kind == "int":
        return RationalFunction.from_int(ctx, node[1])
    if kind == "name":
        name, pos = node[1], node[2]
        try:
            return RationalFunction.from_poly(Polynomial.variable(ctx, name))
        except ValueError:
            raise ParseError(f"unknown name {name!r}", pos[0], pos[1]) from None
    if kind == "neg":
        return -lower(node[1], ctx)
    if kind == "add":
        return lower(node[1], ctx) + lower(node[2], ctx)
    if kind == "sub":
        return lower(node[1], ctx) - lower(node[2], ctx)
    if kind == "mul":
        return lower(node[1], ctx) * lower(node[2], ctx)
    if kind == "div":
        denom = lower(node[2], ctx)
        if denom.is_zero():
            pos = node[3]
            raise ParseError("division by zero", pos[0], pos[1])
        return lower(node[1], ctx) / denom
    if kind == "pow":
        return lower(node[1], ctx) ** node[2]
    raise AssertionError(f"unknown node {kind!r}")


def parse_scalar(text: str, ctx: VarContext) -> RationalFunction:
    """Parse a scalar expression into a canonical rational function."""
    return lower(parse_expression(text), ctx)


def print_scalar(value: RationalFunction) -> str:
    """Deterministic canonical rendering; reparses to an equal value."""
    return str(value)
