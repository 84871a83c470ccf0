"""Expression language for ring elements.

Grammar (whitespace is ignored)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := literal | ident | '(' expr ')'
    literal:= nat | nat '/2^' nat

Identifiers resolve against the ring's fiber, base and named elements.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .polynomials import Polynomial
from .scalars import Variant


class ExprError(ValueError):
    code = "PARSE_ERROR"


class ExprSyntaxError(ExprError):
    code = "SYNTAX_ERROR"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownGenerator(ExprError):
    code = "UNKNOWN_GENERATOR"

    def __init__(self, name: str):
        super().__init__(f"unknown generator {name!r}")
        self.name = name


class DyadicInIntegerRing(ExprError):
    code = "DYADIC_IN_INTEGER_RING"


@dataclass(frozen=True)
class Lit:
    value: Union[int, Fraction]


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Power:
    base: "Node"
    exp: int


Node = Union[Lit, Gen, Neg, Sum, Product, Power]

_TOKEN = re.compile(r"\s*(?:(?P<dyadic>\d+/2\^\d+)|(?P<nat>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
                    r"|(?P<op>[-+*^()]))")


def _tokenize(text: str) -> list:
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = len(text) - len(text[pos:].lstrip())
            raise ExprSyntaxError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, known, dyadic_ok):
        self.toks = _tokenize(text)
        self.i = 0
        self.known = known
        self.dyadic_ok = dyadic_ok

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ExprSyntaxError(f"expected {op!r}", pos)

    def expr(self) -> Node:
        terms = []
        kind, val, _ = self.peek()
        negate = kind == "op" and val == "-"
        if negate:
            self.take()
        t = self.term()
        terms.append(Neg(t) if negate else t)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                terms.append(Neg(t) if val == "-" else t)
            else:
                break
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> Node:
        factors = [self.factor()]
        while self.peek()[:2] == ("op", "*"):
            self.take()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self) -> Node:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, val, pos = self.take()
            if kind != "nat":
                raise ExprSyntaxError("exponent must be a nonnegative integer", pos)
            return Power(base, int(val))
        return base

    def atom(self) -> Node:
        kind, val, pos = self.take()
        if kind == "nat":
            return Lit(int(val))
        if kind == "dyadic":
            if not self.dyadic_ok:
                raise DyadicInIntegerRing(f"dyadic literal {val!r} in an integer ring")
            num, exp = val.split("/2^")
            return Lit(Fraction(int(num), 2 ** int(exp)))
        if kind == "ident":
            if self.known is not None and val not in self.known:
                raise UnknownGenerator(val)
            return Gen(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        what = "end of input" if kind == "end" else repr(val)
        raise ExprSyntaxError(f"unexpected {what}", pos)


def parse_expr(text: str, ring=None) -> Node:
    """Parse ``text``; with a ring, identifiers and literals are validated against it."""
    known = None
    dyadic_ok = True
    if ring is not None:
        known = set(ring.full.names) | set(ring.named)
        dyadic_ok = ring.variant is Variant.DYADIC
    p = _Parser(text, known, dyadic_ok)
    tree = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ExprSyntaxError(f"unexpected {val!r}", pos)
    return tree


def evaluate(tree: Node, ring) -> Polynomial:
    """The raw polynomial over the ring's fiber + base generators."""
    table, variant = ring.full, ring.variant

    def ev(node):
        if isinstance(node, Lit):
            return Polynomial.constant(table, node.value, variant)
        if isinstance(node, Gen):
            if node.name not in ring.named and node.name not in table:
                raise UnknownGenerator(node.name)
            return ring.gen(node.name)
        if isinstance(node, Neg):
            return -ev(node.arg)
        if isinstance(node, Sum):
            out = Polynomial.zero(table, variant)
            for t in node.terms:
                out = out + ev(t)
            return out
        if isinstance(node, Product):
            out = Polynomial.one(table, variant)
            for f in node.factors:
                out = out * ev(f)
            return out
        return ev(node.base) ** node.exp

    return ev(tree)
