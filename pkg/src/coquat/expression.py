"""Tokenizer, AST and recursive-descent parser for the expression language.

Grammar (EBNF):

    expr   := term (("+"|"-") term)* ;
    term   := unary ("*" unary)* ;
    unary  := "-" unary | power ;
    power  := atom ("^" signed-integer)? ;
    atom   := number unit? | unit | "(" expr ")" | ident "(" expr ("," expr)* ")" ;
    unit   := "i" | "j" | "k" ;

Precedence is ^ above unary minus above * above binary +/-; ^ is
non-associative (``q^2^3`` is a parse error) and its exponent must be a
literal integer. ``2i`` denotes 2*i. Every token and AST node carries the
offsets of the source text it came from, so errors can point at the input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .algebra import SplitQuaternion
from .errors import LexError, ParseError


class TokenKind(Enum):
    NUMBER = "number"
    UNIT_I = "i"
    UNIT_J = "j"
    UNIT_K = "k"
    PLUS = "+"
    MINUS = "-"
    STAR = "*"
    CARET = "^"
    LPAREN = "("
    RPAREN = ")"
    COMMA = ","
    IDENT = "identifier"
    END = "end of input"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    start: int
    end: int


_UNIT_KINDS = {"i": TokenKind.UNIT_I, "j": TokenKind.UNIT_J, "k": TokenKind.UNIT_K}
_SYMBOL_KINDS = {
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "^": TokenKind.CARET,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    ",": TokenKind.COMMA,
}

_NUMBER_RE = re.compile(r"\d+(\.\d+)?([eE][+-]?\d+)?")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_INTEGER_RE = re.compile(r"\d+\Z")


def tokenize(src: str) -> list[Token]:
    """Longest-match lexing; unknown characters raise LexError."""
    tokens: list[Token] = []
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch in _SYMBOL_KINDS:
            tokens.append(Token(_SYMBOL_KINDS[ch], ch, i, i + 1))
            i += 1
            continue
        if ch.isdigit():
            m = _NUMBER_RE.match(src, i)
            tokens.append(Token(TokenKind.NUMBER, m.group(), i, m.end()))
            i = m.end()
            continue
        m = _IDENT_RE.match(src, i)
        if m:
            text = m.group()
            kind = _UNIT_KINDS.get(text, TokenKind.IDENT)
            tokens.append(Token(kind, text, i, m.end()))
            i = m.end()
            continue
        raise LexError(f"unexpected character {ch!r} at offset {i}", i, i + 1)
    tokens.append(Token(TokenKind.END, "", n, n))
    return tokens


# -- AST --------------------------------------------------------------------


@dataclass(frozen=True)
class Literal:
    value: SplitQuaternion
    start: int
    end: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    start: int
    end: int


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"
    start: int
    end: int


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"
    start: int
    end: int


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"
    start: int
    end: int


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    start: int
    end: int


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple["Expr", ...]
    start: int
    end: int


Expr = Union[Literal, Neg, Add, Sub, Mul, Pow, Call]

# Registered functions and their arities; the parser rejects unknown names
# and wrong argument counts so every Call in a parsed tree is well-formed.
FUNCTION_ARITY: dict[str, int] = {
    "conj": 1,
    "norm": 1,
    "iq": 1,
    "classify": 1,
    "polar": 1,
    "normalize": 1,
    "inv": 1,
    "exp": 1,
    "matl": 1,
    "matr": 1,
    "pow": 2,
}

_UNIT_VALUES = {
    TokenKind.UNIT_I: (0.0, 1.0, 0.0, 0.0),
    TokenKind.UNIT_J: (0.0, 0.0, 1.0, 0.0),
    TokenKind.UNIT_K: (0.0, 0.0, 0.0, 1.0),
}


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, expected: tuple[str, ...], tok: Token | None = None) -> ParseError:
        tok = tok or self.peek()
        found = repr(tok.text) if tok.kind is not TokenKind.END else "end of input"
        options = " or ".join(expected)
        return ParseError(
            f"expected {options}, found {found} at offset {tok.start}",
            tok.start, max(tok.end, tok.start + 1), expected,
        )

    def expect(self, kind: TokenKind, what: str) -> Token:
        if self.peek().kind is not kind:
            raise self.error((what,))
        return self.advance()

    def parse_expr(self) -> Expr:
        node = self.parse_term()
        while self.peek().kind in (TokenKind.PLUS, TokenKind.MINUS):
            op = self.advance()
            rhs = self.parse_term()
            cls = Add if op.kind is TokenKind.PLUS else Sub
            node = cls(node, rhs, node.start, rhs.end)
        return node

    def parse_term(self) -> Expr:
        node = self.parse_unary()
        while self.peek().kind is TokenKind.STAR:
            self.advance()
            rhs = self.parse_unary()
            node = Mul(node, rhs, node.start, rhs.end)
        return node

    def parse_unary(self) -> Expr:
        if self.peek().kind is TokenKind.MINUS:
            minus = self.advance()
            operand = self.parse_unary()
            return Neg(operand, minus.start, operand.end)
        return self.parse_power()

    def parse_power(self) -> Expr:
        base = self.parse_atom()
        if self.peek().kind is not TokenKind.CARET:
            return base
        self.advance()
        exponent, end = self.parse_signed_integer()
        if self.peek().kind is TokenKind.CARET:
            raise ParseError(
                f"'^' is non-associative; parenthesize at offset {self.peek().start}",
                self.peek().start, self.peek().end, ("end of power",),
            )
        return Pow(base, exponent, base.start, end)

    def parse_signed_integer(self) -> tuple[int, int]:
        negative = False
        if self.peek().kind is TokenKind.MINUS:
            self.advance()
            negative = True
        tok = self.peek()
        if tok.kind is not TokenKind.NUMBER or not _INTEGER_RE.match(tok.text):
            raise self.error(("integer exponent",))
        self.advance()
        value = int(tok.text)
        return (-value if negative else value), tok.end

    def parse_atom(self) -> Expr:
        tok = self.peek()
        if tok.kind is TokenKind.NUMBER:
            self.advance()
            value = float(tok.text)
            nxt = self.peek()
            if nxt.kind in _UNIT_VALUES:
                self.advance()
                u = _UNIT_VALUES[nxt.kind]
                quat = SplitQuaternion(0.0, value * u[1], value * u[2], value * u[3])
                return Literal(quat, tok.start, nxt.end)
            return Literal(SplitQuaternion(value), tok.start, tok.end)
        if tok.kind in _UNIT_VALUES:
            self.advance()
            return Literal(SplitQuaternion(*_UNIT_VALUES[tok.kind]), tok.start, tok.end)
        if tok.kind is TokenKind.LPAREN:
            self.advance()
            node = self.parse_expr()
            closing = self.expect(TokenKind.RPAREN, "')'")
            return _respan(node, tok.start, closing.end)
        if tok.kind is TokenKind.IDENT:
            return self.parse_call()
        raise self.error(("number", "unit", "'('", "function name"))

    def parse_call(self) -> Expr:
        name_tok = self.advance()
        name = name_tok.text
        if name not in FUNCTION_ARITY:
            known = ", ".join(sorted(FUNCTION_ARITY))
            raise ParseError(
                f"unknown function {name!r} at offset {name_tok.start} (known: {known})",
                name_tok.start, name_tok.end, tuple(sorted(FUNCTION_ARITY)),
            )
        self.expect(TokenKind.LPAREN, "'('")
        args = [self.parse_expr()]
        while self.peek().kind is TokenKind.COMMA:
            self.advance()
            args.append(self.parse_expr())
        closing = self.expect(TokenKind.RPAREN, "')' or ','")
        arity = FUNCTION_ARITY[name]
        if len(args) != arity:
            raise ParseError(
                f"{name} takes {arity} argument{'s' if arity != 1 else ''}, got {len(args)}",
                name_tok.start, closing.end, (f"{arity} arguments",),
            )
        return Call(name, tuple(args), name_tok.start, closing.end)


def _respan(node: Expr, start: int, end: int) -> Expr:
    # Parenthesized expressions report the span including the parentheses.
    cls = type(node)
    fields = {f: getattr(node, f) for f in node.__dataclass_fields__}
    fields["start"] = start
    fields["end"] = end
    return cls(**fields)


def parse(tokens: list[Token]) -> Expr:
    """Parse a token stream (ending with END) into an expression tree."""
    p = _Parser(tokens)
    node = p.parse_expr()
    if p.peek().kind is not TokenKind.END:
        raise p.error(("operator", "end of input"))
    return node


def parse_source(src: str) -> Expr:
    return parse(tokenize(src))
