"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' ['-'] INT)?
    atom   := INT ('/' INT)? | 'i' | NAME | '(' expr ')'

Names registered as formal parameters become parameters; every other name is
a coordinate.  The canonical output of :func:`render` parses back to an equal
polynomial.
"""

from __future__ import annotations

import re
from collections.abc import Sequence

from .gauss import GaussQ
from .poly import Poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at offset {pos} in {text!r}")
        self.pos = pos


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - the pattern always matches one char
            raise ParseError("unexpected input", text, pos)
        start = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", m.group(1), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            out.append((ch, ch, start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, ring: tuple[str, ...]):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self) -> str:
        return self.toks[self.i][0]

    def take(self, kind: str):
        tok = self.toks[self.i]
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}", self.text, tok[2])
        self.i += 1
        return tok

    def expr(self) -> Poly:
        sign = 1
        if self.peek() in "+-" and self.peek() != "end":
            sign = -1 if self.take(self.peek())[0] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek() in ("+", "-"):
            op = self.take(self.peek())[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self.peek() == "*":
            self.take("*")
            acc = acc * self.factor()
        return acc

    def factor(self) -> Poly:
        base = self.atom()
        if self.peek() == "^":
            self.take("^")
            neg = False
            if self.peek() == "-":
                self.take("-")
                neg = True
            e = int(self.take("int")[1])
            try:
                base = base ** (-e if neg else e)
            except ValueError as exc:
                raise ParseError(str(exc), self.text, self.toks[self.i - 1][2]) from None
        return base

    def atom(self) -> Poly:
        kind, val, pos = self.toks[self.i]
        if kind == "int":
            self.i += 1
            num = int(val)
            if self.peek() == "/":
                self.take("/")
                den = int(self.take("int")[1])
                if den == 0:
                    raise ParseError("zero denominator", self.text, pos)
                return Poly.const(GaussQ(f"{num}/{den}"), self.ring)
            return Poly.const(num, self.ring)
        if kind == "name":
            self.i += 1
            if val == "i":
                return Poly.const(GaussQ(0, 1), self.ring)
            return Poly.gen(val, self.ring + ((val,) if val not in self.ring else ()))
        if kind == "(":
            self.i += 1
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected token {val or 'end of input'!r}", self.text, pos)


def parse_poly(text: str, variables: Sequence[str] = ()) -> Poly:
    """Parse ``text``; ``variables`` fixes the coordinate order of the ring."""
    if not isinstance(text, str):
        raise TypeError("expected a string")
    p = _Parser(text, tuple(variables))
    out = p.expr()
    p.take("end")
    return out.with_gens(tuple(variables)) if variables else out
