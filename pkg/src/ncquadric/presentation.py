"""Parser for presentation files.

A file describes the ambient quadratic algebra and the central element:

    # three-variable quadric
    field = Q(i)
    vars = x, y, z
    rel = x*z + z*x
    rel = y*z + z*y
    rel = x*x + y*y
    central = x*x + z*z

Every term of a rel or central line is an optional scalar coefficient times
exactly two generator factors.  Coefficients are signed rationals p/q, with
an extra *i factor over Q(i) or *t^k factors over a simple extension.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .fields import parse_field_spec

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUMBER = re.compile(r"[0-9]+")
_RESERVED = ("i", "t")


@dataclass(frozen=True)
class ParsedInput:
    field: object
    generators: tuple
    relation_rows: tuple  # (line_number, coords)
    central_row: tuple  # coords
    central_line: int


def _tokenize(raw, start, line):
    tokens = []
    pos = start
    n = len(raw)
    while pos < n:
        ch = raw[pos]
        if ch in " \t":
            pos += 1
            continue
        col = pos + 1
        if ch in "+-*/^":
            tokens.append((ch, ch, col))
            pos += 1
            continue
        m = _NUMBER.match(raw, pos)
        if m:
            tokens.append(("num", m.group(), col))
            pos = m.end()
            continue
        m = _IDENT.match(raw, pos)
        if m:
            tokens.append(("ident", m.group(), col))
            pos = m.end()
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    return tokens


class _TermParser:
    def __init__(self, field, names, tokens, line):
        self.field = field
        self.names = names
        self.tokens = tokens
        self.line = line
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression", self.line,
                             (self.tokens[-1][2] if self.tokens else 1))
        self.pos += 1
        return tok

    def parse(self):
        """Accumulate the degree-2 coordinate vector of the expression."""
        g = len(self.names)
        coords = [self.field.zero] * (g * g)
        if not self.tokens:
            raise ParseError("empty expression", self.line, 1)
        first = True
        while self.peek() is not None:
            sign = 1
            tok = self.peek()
            if tok[0] in "+-":
                if tok[0] == "-":
                    sign = -1
                self.take()
            elif not first:
                raise ParseError("expected '+' or '-' between terms",
                                 self.line, tok[2])
            first = False
            coeff, a, b, col = self.parse_term()
            if sign < 0:
                coeff = -coeff
            coords[a * g + b] = coords[a * g + b] + coeff
        return coords

    def parse_term(self):
        coeff = self.field.one
        factors = []
        term_col = None
        while True:
            tok = self.take()
            if term_col is None:
                term_col = tok[2]
            kind, text, col = tok
            if kind == "num":
                value = int(text)
                nxt = self.peek()
                if nxt is not None and nxt[0] == "/":
                    self.take()
                    den_tok = self.take()
                    if den_tok[0] != "num" or int(den_tok[1]) == 0:
                        raise ParseError("expected a nonzero denominator",
                                         self.line, den_tok[2])
                    coeff = coeff * self.field.from_rational(value) \
                        / self.field.from_rational(int(den_tok[1]))
                else:
                    coeff = coeff * self.field.from_rational(value)
            elif kind == "ident" and text == "i":
                if self.field.kind != "gaussian":
                    raise ParseError("scalar 'i' requires field = Q(i)",
                                     self.line, col)
                coeff = coeff * self.field.generator()
            elif kind == "ident" and text == "t":
                if self.field.kind != "simple-extension":
                    raise ParseError(
                        "scalar 't' requires an extension field", self.line,
                        col)
                power = 1
                nxt = self.peek()
                if nxt is not None and nxt[0] == "^":
                    self.take()
                    ptok = self.take()
                    if ptok[0] != "num":
                        raise ParseError("expected an integer exponent",
                                         self.line, ptok[2])
                    power = int(ptok[1])
                coeff = coeff * self.field.generator() ** power
            elif kind == "ident":
                if text not in self.names:
                    raise ParseError(f"unknown variable {text!r}", self.line,
                                     col)
                factors.append(self.names.index(text))
            else:
                raise ParseError(f"unexpected token {text!r}", self.line, col)
            nxt = self.peek()
            if nxt is None or nxt[0] in "+-":
                break
            if nxt[0] != "*":
                raise ParseError("expected '*' between factors", self.line,
                                 nxt[2])
            self.take()
        if len(factors) != 2:
            raise ParseError(
                "each term needs exactly two variable factors", self.line,
                term_col)
        return coeff, factors[0], factors[1], term_col


def parse_source(text):
    """Parse presentation text into field, generators, and tensor rows."""
    field = None
    names = None
    rels = []
    central = None
    central_line = None
    for line_no, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ParseError("expected 'key = value'", line_no, 1)
        eq = raw.index("=")
        key = raw[:eq].strip()
        value_start = eq + 1
        value = raw[value_start:].strip()
        if key == "field":
            if field is not None:
                raise ParseError("duplicate field line", line_no, 1)
            try:
                field = parse_field_spec(value)
            except ValueError as exc:
                raise ParseError(str(exc), line_no, value_start + 1)
        elif key == "vars":
            if names is not None:
                raise ParseError("duplicate vars line", line_no, 1)
            parts = [p.strip() for p in value.split(",")]
            for p in parts:
                if not p or not _IDENT.fullmatch(p):
                    raise ParseError(f"bad variable name {p!r}", line_no,
                                     value_start + 1)
                if p in _RESERVED:
                    raise ParseError(
                        f"variable name {p!r} is reserved for scalars",
                        line_no, value_start + 1)
            if len(set(parts)) != len(parts):
                raise ParseError("duplicate variable names", line_no,
                                 value_start + 1)
            names = tuple(parts)
        elif key in ("rel", "central"):
            if field is None:
                raise ParseError("field must be declared before relations",
                                 line_no, 1)
            if names is None:
                raise ParseError("vars must be declared before relations",
                                 line_no, 1)
            tokens = _tokenize(raw, value_start, line_no)
            coords = _TermParser(field, names, tokens, line_no).parse()
            if all(not c for c in coords):
                raise ParseError("expression reduces to zero", line_no,
                                 value_start + 1)
            if key == "rel":
                rels.append((line_no, tuple(coords)))
            else:
                if central is not None:
                    raise ParseError("duplicate central line", line_no, 1)
                central = tuple(coords)
                central_line = line_no
        else:
            raise ParseError(f"unknown key {key!r}", line_no, 1)
    if field is None:
        raise ParseError("missing field line")
    if names is None:
        raise ParseError("missing vars line")
    if central is None:
        raise ParseError("missing central line")
    return ParsedInput(field, names, tuple(rels), central, central_line)


def parse_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_source(fh.read())
