"""
Infix polynomial literals for the command line

Grammar (implicit multiplication allowed before 'x' and '('):

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary | unary-without-sign)*
    unary   := ('-' | '+') unary | power
    power   := primary ('^' INT)?
    primary := INT | 'x' | '(' expr ')'

Division is only allowed by a nonzero constant, which is how rational
coefficients such as 1/8 are written.
"""

import re
from typing import List, NamedTuple, Optional

from .errors import ParseError
from .polycore import RationalPoly

# largest degree a single "^" may produce; bigger literals are refused before expanding
MAX_POWER_DEGREE = 1000

_TOKEN_RE = re.compile(r"(?P<num>\d+)|(?P<var>[xX])|(?P<op>[-+*/^()])|(?P<ws>\s+)|(?P<bad>.)")


class _Token(NamedTuple):
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        kind = m.lastgroup
        if kind == "ws":
            continue
        if kind == "bad":
            raise ParseError(f"Unexpected character {m.group()!r}", m.start())
        tokens.append(_Token(kind, m.group(), m.start()))
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def _take(self, text: Optional[str] = None) -> _Token:
        t = self.tok
        if text is not None and t.text != text:
            raise ParseError(f"Expected {text!r}, found {t.text or 'end of input'!r}", t.pos)
        self.i += 1
        return t

    def parse(self) -> RationalPoly:
        if self.tok.kind == "end":
            raise ParseError("Empty polynomial literal", 0)
        result = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"Unexpected {self.tok.text!r}", self.tok.pos)
        return result

    def expr(self) -> RationalPoly:
        result = self.term()
        while self.tok.text in ("+", "-"):
            op = self._take().text
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> RationalPoly:
        result = self.unary()
        while True:
            t = self.tok
            if t.text == "*":
                self._take()
                result = result * self.unary()
            elif t.text == "/":
                self._take()
                divisor = self.unary()
                if divisor.degree != 0:
                    raise ParseError("Division is only allowed by a nonzero constant", t.pos)
                result = result * RationalPoly.constant(1 / divisor.leading)
            elif t.kind == "var" or t.text == "(":
                result = result * self.power()
            else:
                return result

    def unary(self) -> RationalPoly:
        if self.tok.text == "-":
            self._take()
            return -self.unary()
        if self.tok.text == "+":
            self._take()
            return self.unary()
        return self.power()

    def power(self) -> RationalPoly:
        base = self.primary()
        if self.tok.text == "^":
            self._take()
            t = self.tok
            if t.kind != "num":
                raise ParseError("Exponent must be a nonnegative integer", t.pos)
            self._take()
            exponent = int(t.text)
            if exponent > MAX_POWER_DEGREE or (not base.is_zero and base.degree * exponent > MAX_POWER_DEGREE):
                raise ParseError(f"Power of degree above {MAX_POWER_DEGREE} refused", t.pos)
            return base ** exponent
        return base

    def primary(self) -> RationalPoly:
        t = self.tok
        if t.kind == "num":
            self._take()
            return RationalPoly.constant(int(t.text))
        if t.kind == "var":
            self._take()
            return RationalPoly.x()
        if t.text == "(":
            self._take()
            inner = self.expr()
            self._take(")")
            return inner
        raise ParseError(f"Unexpected {t.text or 'end of input'!r}", t.pos)


def parse_poly(text: str) -> RationalPoly:
    """Parse an infix literal like "(1+x)^3" or "4x^2 + 4x + 1"."""
    return _Parser(text).parse()
