"""Parsers for the textual interfaces.

Scalar grammar (used for line coefficients and standalone values):

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := "-" factor | atom ("^" integer)?
    atom   := integer | "zeta(" integer ")" | "x0".."x3" | "(" expr ")"

Line literals are two forms separated by ";", with an optional "line:"
prefix.  Divisor expressions are signed integer combinations of a model's
generator names, e.g. "2*H - L[01|23](0,0)"; whitespace is ignored and an
unknown name is rejected together with the list of valid generators.
"""

import re

from .cyclo import rational, zeta
from .geometry import Line


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(zeta|x[0-3]|\d+|[()+\-*/^])")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"unexpected input at {text[pos:].strip()[:20]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _LinValue:
    """Scalar plus a linear part in x0..x3; products must stay linear."""

    __slots__ = ("const", "vec")

    def __init__(self, const, vec=None):
        self.const = const
        self.vec = vec or (rational(0),) * 4

    def is_scalar(self):
        return all(c.is_zero() for c in self.vec)

    def __add__(self, other):
        return _LinValue(
            self.const + other.const,
            tuple(a + b for a, b in zip(self.vec, other.vec)),
        )

    def __sub__(self, other):
        return _LinValue(
            self.const - other.const,
            tuple(a - b for a, b in zip(self.vec, other.vec)),
        )

    def __neg__(self):
        return _LinValue(-self.const, tuple(-c for c in self.vec))

    def __mul__(self, other):
        if other.is_scalar():
            s = other.const
            return _LinValue(self.const * s, tuple(c * s for c in self.vec))
        if self.is_scalar():
            return other * self
        raise ParseError("nonlinear product of coordinates")

    def __truediv__(self, other):
        if not other.is_scalar():
            raise ParseError("division by a coordinate expression")
        if other.const.is_zero():
            raise ParseError("division by zero")
        inv = other.const.inverse()
        return _LinValue(self.const * inv, tuple(c * inv for c in self.vec))


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expect=None):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression")
        if expect is not None and tok != expect:
            raise ParseError(f"expected {expect!r}, found {tok!r}")
        self.pos += 1
        return tok

    def parse_expr(self):
        value = self.parse_term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self):
        value = self.parse_factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.parse_factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def parse_factor(self):
        if self.peek() == "-":
            self.take()
            return -self.parse_factor()
        value = self.parse_atom()
        while self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            e = self.take()
            if not e.isdigit():
                raise ParseError(f"exponent must be an integer, found {e!r}")
            if not value.is_scalar():
                raise ParseError("coordinates cannot be raised to powers here")
            value = _LinValue(value.const ** (sign * int(e)))
        return value

    def parse_atom(self):
        tok = self.take()
        if tok.isdigit():
            return _LinValue(rational(int(tok)))
        if tok == "zeta":
            self.take("(")
            n = self.take()
            if not n.isdigit():
                raise ParseError(f"zeta order must be an integer, found {n!r}")
            self.take(")")
            return _LinValue(zeta(int(n)))
        if tok in ("x0", "x1", "x2", "x3"):
            vec = [rational(0)] * 4
            vec[int(tok[1])] = rational(1)
            return _LinValue(rational(0), tuple(vec))
        if tok == "(":
            value = self.parse_expr()
            self.take(")")
            return value
        raise ParseError(f"unexpected token {tok!r}")


def _parse(text):
    parser = _Parser(_tokenize(text))
    value = parser.parse_expr()
    if parser.peek() is not None:
        raise ParseError(f"trailing input starting at {parser.peek()!r}")
    return value


def parse_scalar(text):
    """An exact scalar value, e.g. "1/2 - zeta(8)^3"."""
    value = _parse(text)
    if not value.is_scalar():
        raise ParseError("expected a scalar, found coordinates")
    return value.const


def parse_linear_form(text):
    """Coefficients of a linear form in x0..x3."""
    value = _parse(text)
    if not value.const.is_zero():
        raise ParseError("a projective linear form cannot have a constant term")
    if value.is_scalar():
        raise ParseError("the form has no coordinate part")
    return value.vec


def parse_line(text):
    """A line literal: two forms separated by ";", optional "line:" prefix."""
    body = text.strip()
    if body.lower().startswith("line:"):
        body = body[5:]
    pieces = body.split(";")
    if len(pieces) != 2:
        raise ParseError('a line literal needs exactly two forms separated by ";"')
    return Line(parse_linear_form(pieces[0]), parse_linear_form(pieces[1]))


_NAME_SPLIT = re.compile(r"(?<![(,])[+-]")


def parse_divisor(text, model):
    """Integer combination of generator names over the given model."""
    compact = "".join(text.split())
    if not compact:
        raise ParseError("empty divisor expression")
    terms = []
    start = 0
    for m in _NAME_SPLIT.finditer(compact, 1):
        terms.append(compact[start : m.start()])
        start = m.start()
    terms.append(compact[start:])
    coeffs = [0] * model.ngens
    for term in terms:
        if not term or term in "+-":
            raise ParseError(f"malformed term in divisor expression {text!r}")
        sign = 1
        if term[0] == "+":
            term = term[1:]
        elif term[0] == "-":
            sign = -1
            term = term[1:]
        mult = 1
        m = re.match(r"(\d+)\*?", term)
        if m:
            mult = int(m.group(1))
            term = term[m.end() :]
        if not term:
            raise ParseError("a bare integer is not a divisor term; name a generator")
        try:
            idx = model.generators.index(term)
        except ValueError:
            raise ParseError(
                f"unknown generator {term!r}; valid names: {', '.join(model.generators)}"
            ) from None
        coeffs[idx] += sign * mult
    return model.class_of(coeffs)


def format_divisor(d):
    """Inverse of parse_divisor, canonical generator order."""
    bits = []
    for name, c in zip(d.model.generators, d.coeffs):
        if not c:
            continue
        body = name if abs(c) == 1 else f"{abs(c)}*{name}"
        if not bits:
            bits.append(body if c > 0 else f"-{body}")
        else:
            bits.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(bits) if bits else "0"
