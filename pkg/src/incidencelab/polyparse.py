"""Recursive-descent parser for polynomial expressions in x, y, z.

Grammar:

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := rational | 'x' | 'y' | 'z' | '(' expr ')'
    rational := ['-'] digits ('/' digits)?

Whitespace is ignored.  Implicit multiplication is not allowed ("2x" is a
syntax error, write "2*x").
"""

from __future__ import annotations

from fractions import Fraction

from .multipoly import MultiPoly, to_string

MAX_EXPONENT = 64

VAR_INDEX = {"x": 0, "y": 1, "z": 2}


class PolyParseError(ValueError):
    """Syntax error with the offending position."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._skip_ws()
        if self.pos >= len(self.text):
            return ""
        return self.text[self.pos]

    def take(self):
        ch = self.peek()
        self.pos += 1
        return ch

    def expect(self, ch):
        got = self.peek()
        if got != ch:
            raise PolyParseError(f"expected {ch!r}, found {got!r}" if got else f"expected {ch!r}, found end of input", self.pos)
        self.pos += 1

    def _digits(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise PolyParseError("expected digits", start)
        return int(self.text[start:self.pos])

    def parse_uint(self):
        self._skip_ws()
        if not self.peek().isdigit():
            raise PolyParseError(f"expected an unsigned integer, found {self.peek()!r}", self.pos)
        return self._digits()

    def parse_rational(self, negative=False):
        num = self._digits()
        if self.pos < len(self.text) and self.text[self.pos] == "/":
            self.pos += 1
            if self.pos >= len(self.text) or not self.text[self.pos].isdigit():
                raise PolyParseError("expected denominator digits after '/'", self.pos)
            den = self._digits()
            if den == 0:
                raise PolyParseError("zero denominator", self.pos)
            value = Fraction(num, den)
        else:
            value = Fraction(num)
        return -value if negative else value

    def parse_base(self):
        ch = self.peek()
        if ch == "(":
            self.take()
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if ch in VAR_INDEX:
            self.take()
            return MultiPoly.var(3, VAR_INDEX[ch])
        if ch == "-":
            self.take()
            if not self.peek().isdigit():
                raise PolyParseError("'-' may only prefix a rational literal here", self.pos)
            return MultiPoly.const(3, self.parse_rational(negative=True))
        if ch.isdigit():
            self._skip_ws()
            return MultiPoly.const(3, self.parse_rational())
        if ch == "":
            raise PolyParseError("unexpected end of input", self.pos)
        raise PolyParseError(f"unexpected character {ch!r}", self.pos)

    def parse_factor(self):
        base = self.parse_base()
        if self.peek() == "^":
            self.take()
            at = self.pos
            exp = self.parse_uint()
            if exp > MAX_EXPONENT:
                raise PolyParseError(f"exponent {exp} exceeds the cap of {MAX_EXPONENT}", at)
            return base ** exp
        return base

    def parse_term(self):
        acc = self.parse_factor()
        while self.peek() == "*":
            self.take()
            acc = acc * self.parse_factor()
        return acc

    def parse_expr(self):
        acc = self.parse_term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.take()
                acc = acc + self.parse_term()
            elif ch == "-":
                self.take()
                acc = acc - self.parse_term()
            else:
                return acc


def parse_poly(text: str) -> MultiPoly:
    """Parse an expression into an exact arity-3 polynomial."""
    parser = _Parser(text)
    poly = parser.parse_expr()
    if parser.peek() != "":
        raise PolyParseError(f"trailing input {parser.peek()!r}", parser.pos)
    return poly


def print_poly(p: MultiPoly) -> str:
    """Grammar-conformant text; parse_poly(print_poly(p)) == p."""
    if p.arity != 3:
        raise ValueError("printer handles arity-3 polynomials")
    return to_string(p, names=["x", "y", "z"])
