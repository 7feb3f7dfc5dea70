"""Text grammar for bivariate polynomials, and the canonical printer.

Accepted input is a sum of products of factors, where a factor is one of
the variables ``z``/``w``, the imaginary unit ``i``, an integer or
rational literal (``7``, ``2/3``, optionally suffixed with ``i`` as in
``11i`` or ``2/3i``), or a parenthesized subexpression; any factor may
carry a ``^`` integer power.  Multiplication is written with ``*`` or by
juxtaposition, whitespace is insignificant, and a leading ``-`` negates
the first term:

    i z^3 w^2 + 5 z^3 w - z^2 w^2 + (1/2-3i) z + (z w + 1)^2

The printer emits terms in descending (z power, w power) order with
coefficients in the same literal forms, so parse(print(p)) == p.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import GaussianRational, I
from .poly import BiPoly, UniPoly

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<number>\d+(?:/\d+)?(?P<imag>i)?)
  | (?P<var>[zw])
  | (?P<unit>i)
  | (?P<op>[+\-*^()])
    """,
    re.VERBOSE,
)


@dataclass
class _Token:
    kind: str      # number | var | unit | + - * ^ ( ) | end
    text: str
    pos: int
    value: Fraction | None = None
    imag: bool = False


class ParseError(ValueError):
    """Syntax error with the offending offset and the expected tokens."""

    def __init__(self, message: str, pos: int, expected: tuple[str, ...] = ()):
        detail = f"{message} at offset {pos}"
        if expected:
            detail += f" (expected {', '.join(expected)})"
        super().__init__(detail)
        self.pos = pos
        self.expected = expected


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        if m.group("ws") is None:
            if m.group("number") is not None:
                body = m.group("number")
                tokens.append(
                    _Token(
                        kind="number",
                        text=body,
                        pos=pos,
                        value=Fraction(body.rstrip("i")),
                        imag=body.endswith("i"),
                    )
                )
            elif m.group("var") is not None:
                tokens.append(_Token(kind="var", text=m.group(), pos=pos))
            elif m.group("unit") is not None:
                tokens.append(_Token(kind="unit", text=m.group(), pos=pos))
            else:
                tokens.append(_Token(kind=m.group(), text=m.group(), pos=pos))
        pos = m.end()
    tokens.append(_Token(kind="end", text="", pos=len(text)))
    return tokens


_Z = BiPoly.from_terms({(1, 0): 1})
_W = BiPoly.from_terms({(0, 1): 1})

_FACTOR_STARTS = ("number", "variable z or w", "i", "(")


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.idx = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.idx]

    def advance(self) -> _Token:
        tok = self.current
        self.idx += 1
        return tok

    def parse(self) -> BiPoly:
        value = self.expression()
        if self.current.kind != "end":
            raise ParseError(
                f"trailing input {self.current.text!r}",
                self.current.pos,
                ("+", "-", "end of input"),
            )
        return value

    def expression(self) -> BiPoly:
        negate = False
        if self.current.kind in ("+", "-"):
            negate = self.advance().kind == "-"
        total = self.term()
        if negate:
            total = -total
        while self.current.kind in ("+", "-"):
            op = self.advance().kind
            nxt = self.term()
            total = total - nxt if op == "-" else total + nxt
        return total

    def term(self) -> BiPoly:
        value = self.factor()
        while True:
            kind = self.current.kind
            if kind == "*":
                self.advance()
                value = value * self.factor()
            elif kind in ("number", "var", "unit", "("):
                value = value * self.factor()
            else:
                return value

    def factor(self) -> BiPoly:
        base = self.primary()
        if self.current.kind == "^":
            caret = self.advance()
            tok = self.current
            if tok.kind != "number" or tok.imag or tok.value.denominator != 1:
                raise ParseError(
                    "exponent must be a nonnegative integer",
                    tok.pos if tok.kind != "end" else caret.pos + 1,
                    ("integer",),
                )
            self.advance()
            base = base ** int(tok.value)
        return base

    def primary(self) -> BiPoly:
        tok = self.current
        if tok.kind == "number":
            self.advance()
            c = GaussianRational(Fraction(0), tok.value) if tok.imag else (
                GaussianRational(tok.value)
            )
            return BiPoly.constant(c)
        if tok.kind == "unit":
            self.advance()
            return BiPoly.constant(I)
        if tok.kind == "var":
            self.advance()
            return _Z if tok.text == "z" else _W
        if tok.kind == "(":
            self.advance()
            inner = self.expression()
            if self.current.kind != ")":
                raise ParseError(
                    "unbalanced parenthesis", self.current.pos, (")",)
                )
            self.advance()
            return inner
        raise ParseError(
            f"unexpected {tok.text!r}" if tok.kind != "end" else "unexpected end of input",
            tok.pos,
            _FACTOR_STARTS,
        )


def parse_poly(text: str) -> BiPoly:
    """Parse the shared polynomial grammar into a coefficient grid."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# canonical printing
# ---------------------------------------------------------------------------


def _variables_text(j: int, k: int) -> str:
    parts = []
    if j:
        parts.append("z" if j == 1 else f"z^{j}")
    if k:
        parts.append("w" if k == 1 else f"w^{k}")
    return " ".join(parts)


def _term_text(c: GaussianRational, variables: str) -> tuple[int, str]:
    """(sign, body) of one printed term; the sign joins the terms."""
    if c.re != 0 and c.im != 0:
        body = f"({c})"
        return 1, f"{body} {variables}" if variables else body
    if c.im != 0:
        sign = 1 if c.im > 0 else -1
        mag = abs(c.im)
        body = "i" if mag == 1 else f"{mag}i"
    else:
        sign = 1 if c.re > 0 else -1
        mag = abs(c.re)
        body = "" if (mag == 1 and variables) else str(mag)
    if variables:
        body = f"{body} {variables}".strip()
    return sign, body


def format_poly(p: BiPoly) -> str:
    """Canonical text: descending (z, w) powers, reparses to the same grid."""
    terms = sorted(p.terms(), key=lambda t: (-t[0], -t[1]))
    if not terms:
        return "0"
    pieces: list[str] = []
    for idx, (j, k, c) in enumerate(terms):
        sign, body = _term_text(c, _variables_text(j, k))
        if idx == 0:
            pieces.append(f"-{body}" if sign < 0 else body)
        else:
            pieces.append(f"{'-' if sign < 0 else '+'} {body}")
    return " ".join(pieces)


def format_unipoly(p: UniPoly, variable: str) -> str:
    """Canonical text of a univariate polynomial in the given variable."""
    if p.is_zero:
        return "0"
    pieces: list[str] = []
    first = True
    for r in range(p.degree, -1, -1):
        c = p.coeff(r)
        if c.is_zero:
            continue
        variables = "" if r == 0 else (variable if r == 1 else f"{variable}^{r}")
        sign, body = _term_text(c, variables)
        if first:
            pieces.append(f"-{body}" if sign < 0 else body)
            first = False
        else:
            pieces.append(f"{'-' if sign < 0 else '+'} {body}")
    return " ".join(pieces)
