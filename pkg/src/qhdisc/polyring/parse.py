"""Recursive-descent parser for bivariate polynomial text.

Grammar (whitespace ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INTEGER)?
    atom   := INTEGER | NAME | "(" expr ")"

Implicit multiplication is rejected.  ``/`` only accepts a nonzero constant
divisor; it exists so that printed rational coefficients (``3/4*x``) read
back in.
"""

from __future__ import annotations

import re

from .bivar import BivarPoly
from .fields import QQ

MAX_EXPONENT = 10_000

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class PolySyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos or m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2):
            toks.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolySyntaxError(f"unexpected character {ch!r}", start)
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text, names, field):
        self.toks = _tokenize(text)
        self.i = 0
        self.names = names
        self.field = field

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolySyntaxError(f"expected {kind!r}, found {what}", tok[2])
        return tok

    def expr(self):
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            rhs = self.unary()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise PolySyntaxError("division only by a nonzero constant", pos)
                acc = acc * self.field.inv(rhs.coeff(0, 0))
        return acc

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise PolySyntaxError("exponent must be a nonnegative integer", pos)
            if val > MAX_EXPONENT:
                raise PolySyntaxError(f"exponent {val} exceeds {MAX_EXPONENT}", pos)
            base = base**val
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return BivarPoly.constant(val, self.field, self.names)
        if kind == "name":
            if val == self.names[0]:
                return BivarPoly.monomial(1, 0, 1, self.field, self.names)
            if val == self.names[1]:
                return BivarPoly.monomial(0, 1, 1, self.field, self.names)
            raise PolySyntaxError(f"unknown identifier {val!r}", pos)
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        what = "end of input" if kind == "end" else repr(val)
        raise PolySyntaxError(f"unexpected {what}", pos)


def parse_poly(text: str, var_names=("x", "y"), field=QQ) -> BivarPoly:
    """Parse ``text`` into canonical sparse form over ``field``."""
    p = _Parser(text, tuple(var_names), field)
    result = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise PolySyntaxError(f"unexpected {val!r}", pos)
    return result


def format_poly(f: BivarPoly) -> str:
    return str(f)
