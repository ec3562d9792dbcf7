"""Recursive-descent parser for the documented expression grammar."""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError, UnknownSymbol
from .nodes import Add, Call, Coord, Div, Expr, FUNCTIONS, Imag, Mul, Neg, Num, Pow, Sub

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*/^()]))"
)

_COORD_RE = re.compile(r"^u(\d+)$")


@dataclass(frozen=True)
class _Token:
    kind: str  # 'number' | 'ident' | the operator character | 'end'
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_pos = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[bad_pos]!r}", bad_pos,
                             {"number", "identifier", "operator"})
        if m.group("number") is not None:
            tokens.append(_Token("number", m.group("number"), m.start("number")))
        elif m.group("ident") is not None:
            tokens.append(_Token("ident", m.group("ident"), m.start("ident")))
        else:
            op = m.group("op")
            tokens.append(_Token(op, op, m.start("op")))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], nvars: int | None):
        self.tokens = tokens
        self.k = 0
        self.nvars = nvars

    def peek(self) -> _Token:
        return self.tokens[self.k]

    def take(self) -> _Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, kind: str, expected: set[str]) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                             tok.pos, expected)
        return self.take()

    def expr(self) -> Expr:
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.take()
            rhs = self.term()
            node = Add(node, rhs) if op.kind == "+" else Sub(node, rhs)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            node = Mul(node, rhs) if op.kind == "*" else Div(node, rhs)
        return node

    def factor(self) -> Expr:
        base = self.unary()
        if self.peek().kind == "^":
            self.take()
            return Pow(base, self.factor())
        return base

    def unary(self) -> Expr:
        if self.peek().kind == "-":
            self.take()
            return Neg(self.atom())
        return self.atom()

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "number":
            self.take()
            return Num(float(tok.text))
        if tok.kind == "(":
            self.take()
            inner = self.expr()
            self.expect(")", {")"})
            return inner
        if tok.kind == "ident":
            self.take()
            name = tok.text
            if name == "i":
                return Imag()
            if name in FUNCTIONS:
                self.expect("(", {"("})
                arg = self.expr()
                self.expect(")", {")"})
                return Call(name, arg)
            m = _COORD_RE.match(name)
            if m is None:
                raise UnknownSymbol(name, tok.pos)
            index = int(m.group(1))
            if self.nvars is not None and index >= self.nvars:
                raise UnknownSymbol(name, tok.pos)
            return Coord(index)
        raise ParseError(f"expected a value, found {tok.text or 'end of input'!r}",
                         tok.pos, {"number", "identifier", "'i'", "'('", "'-'"})


def parse(text: str, nvars: int | None = None) -> Expr:
    """Parse ``text`` into an AST.

    When ``nvars`` is given, coordinate symbols must be among ``u0..u{nvars-1}``;
    otherwise any ``u<k>`` is accepted.  Raises :class:`ParseError` with the
    failing position, or :class:`UnknownSymbol` for identifiers outside the
    coordinate/function vocabulary.
    """
    parser = _Parser(_tokenize(text), nvars)
    node = parser.expr()
    tok = parser.peek()
    if tok.kind != "end":
        raise ParseError(f"trailing input {tok.text!r}", tok.pos, {"end of input"})
    return node
