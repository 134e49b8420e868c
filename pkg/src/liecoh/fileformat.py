"""The algebra/family file grammar: parsing and deterministic emission.

    # h3 on its usual basis
    basis X Y Z
    dim 3
    [1,2] = 3

Bracket lines read ``[i,j] = c1*k1 + c2*k2 + ...`` with 1-based basis
indices k and rational coefficients c written as ``p/q`` or integers.
Family files draw the coefficients from polynomials in t instead:
``[2,3] = t*4`` or ``[1,2] = (1 - t)*3 + t^2*4``.  In every product the
final factor is the basis index; everything before it multiplies into
the coefficient.  ``#`` starts a comment; whitespace is free.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .linalg import Poly, poly_str
from .lie import LieAlgebra
from .deform import DeformationFamily
from . import catalog as _catalog


class FileFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = f"{source or '<input>'}" + (f":{line}" if line else "")
        super().__init__(f"{where}: {message}")


_NUM = re.compile(r"\d+(?:/\d+)?")
_BRACKET = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*=\s*(.*)\Z")


def _tokenize(text: str, line_no: int, source: str) -> list:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        m = _NUM.match(text, i)
        if m:
            tokens.append(("num", Fraction(m.group(0))))
            i = m.end()
            continue
        if ch in "()*^+-":
            tokens.append(("op", ch))
            i += 1
            continue
        if ch == "t":
            tokens.append(("t", None))
            i += 1
            continue
        raise FileFormatError(f"unexpected character {ch!r}", line_no, source)
    return tokens


class _TermParser:
    """Recursive descent over one bracket right-hand side."""

    def __init__(self, tokens, line_no: int, source: str):
        self.tokens = tokens
        self.pos = 0
        self.line = line_no
        self.source = source

    def error(self, message: str):
        raise FileFormatError(message, self.line, self.source)

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def accept_op(self, *ops) -> str | None:
        kind, val = self.peek()
        if kind == "op" and val in ops:
            self.pos += 1
            return val
        return None

    # -- polynomial sub-expressions (inside parentheses and factors) ------

    def parse_expr(self) -> Poly:
        sign = 1
        if self.accept_op("-"):
            sign = -1
        else:
            self.accept_op("+")
        acc = self.parse_product()
        if sign < 0:
            acc = -acc
        while True:
            op = self.accept_op("+", "-")
            if op is None:
                return acc
            term = self.parse_product()
            acc = acc + term if op == "+" else acc - term

    def parse_product(self) -> Poly:
        acc = self.parse_power()
        while self.accept_op("*"):
            acc = acc * self.parse_power()
        return acc

    def parse_power(self) -> Poly:
        base = self.parse_atom()
        if self.accept_op("^"):
            kind, val = self.take()
            if kind != "num" or val.denominator != 1 or val < 0:
                self.error("exponent must be a nonnegative integer")
            out = Poly.const(1)
            for _ in range(int(val)):
                out = out * base
            return out
        return base

    def parse_atom(self) -> Poly:
        kind, val = self.take()
        if kind == "num":
            return Poly.const(val)
        if kind == "t":
            return Poly.t()
        if kind == "op" and val == "(":
            inner = self.parse_expr()
            if not self.accept_op(")"):
                self.error("missing closing parenthesis")
            return inner
        self.error("expected a number, 't' or a parenthesised expression")

    # -- sum of coefficient*index terms -----------------------------------

    def parse_rhs(self, dim: int, polynomial: bool) -> list[Poly]:
        out = [Poly() for _ in range(dim)]
        if [k for k, _ in self.tokens] == ["num"] and self.tokens[0][1] == 0:
            return out  # explicit zero right-hand side
        first = True
        while True:
            sign = 1
            if first:
                if self.accept_op("-"):
                    sign = -1
                first = False
            else:
                op = self.accept_op("+", "-")
                if op is None:
                    self.error("expected '+' or '-' between terms")
                sign = -1 if op == "-" else 1
            while self.accept_op("-"):
                sign = -sign
            coeff, index = self.parse_term()
            if not polynomial and not coeff.is_constant():
                self.error("polynomial coefficients are only allowed in family files")
            if not 1 <= index <= dim:
                self.error(f"basis index {index} out of range 1..{dim}")
            out[index - 1] = out[index - 1] + (coeff * sign if sign < 0 else coeff)
            if self.pos >= len(self.tokens):
                return out

    def parse_term(self) -> tuple[Poly, int]:
        factors = []  # (poly, bare integer value or None)
        while True:
            kind, val = self.peek()
            if kind == "num":
                self.pos += 1
                if self.accept_op("^"):
                    self.error("exponents apply to 't' or parenthesised expressions")
                factors.append((Poly.const(val), int(val) if val.denominator == 1 else None))
            elif kind == "t" or (kind == "op" and val == "("):
                factors.append((self.parse_power(), None))
            else:
                self.error("expected a coefficient or basis index")
            if not self.accept_op("*"):
                break
        poly, bare = factors[-1]
        if bare is None:
            self.error("each term must end with '*k' for a basis index k")
        coeff = Poly.const(1)
        for f, _ in factors[:-1]:
            coeff = coeff * f
        return coeff, bare


def _parse_lines(text: str, source: str):
    """Shared structure pass: names, dim, raw bracket entries."""
    names = None
    names_line = None
    dim = None
    entries = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "basis":
            if names is not None:
                raise FileFormatError("duplicate basis line", line_no, source)
            names = parts[1:]
            names_line = line_no
            if not names:
                raise FileFormatError("basis line needs at least one name", line_no, source)
            continue
        if parts[0] == "dim":
            if dim is not None:
                raise FileFormatError("duplicate dim line", line_no, source)
            if len(parts) != 2 or not parts[1].isdigit():
                raise FileFormatError("dim line must read 'dim n'", line_no, source)
            dim = int(parts[1])
            continue
        m = _BRACKET.match(line)
        if m is None:
            raise FileFormatError(f"unrecognised line {line!r}", line_no, source)
        if dim is None:
            raise FileFormatError("bracket line before the dim line", line_no, source)
        i, j = int(m.group(1)), int(m.group(2))
        if not 1 <= i <= dim or not 1 <= j <= dim:
            raise FileFormatError(f"bracket indices [{i},{j}] out of range 1..{dim}", line_no, source)
        if i >= j:
            raise FileFormatError(f"bracket [{i},{j}] needs i < j", line_no, source)
        if (i - 1, j - 1) in entries:
            raise FileFormatError(f"duplicate bracket [{i},{j}]", line_no, source)
        entries[(i - 1, j - 1)] = (m.group(3), line_no)
    if dim is None:
        raise FileFormatError("missing required 'dim n' line", None, source)
    if names is not None and len(names) != dim:
        raise FileFormatError(
            f"basis line names {len(names)} elements but dim is {dim}", names_line, source
        )
    return names, dim, entries


def parse_algebra(text: str, source: str = "<string>") -> LieAlgebra:
    """Parse an algebra file; Jacobi is validated and failures raise."""
    names, dim, entries = _parse_lines(text, source)
    brackets = {}
    for key, (rhs, line_no) in entries.items():
        parser = _TermParser(_tokenize(rhs, line_no, source), line_no, source)
        polys = parser.parse_rhs(dim, polynomial=False)
        brackets[key] = [p.coefficient(0) for p in polys]
    return LieAlgebra(dim, brackets, names=names)


def parse_family(text: str, source: str = "<string>") -> DeformationFamily:
    """Parse a family file; the symbolic Jacobi status is not enforced here."""
    names, dim, entries = _parse_lines(text, source)
    brackets = {}
    for key, (rhs, line_no) in entries.items():
        parser = _TermParser(_tokenize(rhs, line_no, source), line_no, source)
        brackets[key] = parser.parse_rhs(dim, polynomial=True)
    return DeformationFamily(dim, brackets, names=names)


def load_algebra(path) -> LieAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra(fh.read(), source=str(path))


def load_family(path) -> DeformationFamily:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_family(fh.read(), source=str(path))


def _join_terms(terms: list[str]) -> str:
    out = terms[0]
    for t in terms[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


def _constant_term(c: Fraction, index: int) -> str:
    if c == 1:
        return f"{index}"
    if c == -1:
        return f"-{index}"
    return f"{c}*{index}"


def _poly_term(p: Poly, index: int) -> str:
    if p.is_constant():
        return _constant_term(p.coefficient(0), index)
    nonzero = [(k, c) for k, c in enumerate(p.coeffs) if c]
    if len(nonzero) == 1:
        k, c = nonzero[0]
        mono = poly_str(Poly([0] * k + [c]))
        return f"{mono}*{index}"
    return f"({poly_str(p)})*{index}"


def serialize_algebra(L: LieAlgebra) -> str:
    lines = ["basis " + " ".join(L.names), f"dim {L.dim}"]
    for (i, j) in sorted(L.sc):
        terms = [
            _constant_term(c, k + 1) for k, c in enumerate(L.sc[(i, j)]) if c
        ]
        lines.append(f"[{i + 1},{j + 1}] = " + _join_terms(terms))
    return "\n".join(lines) + "\n"


def serialize_family(F: DeformationFamily) -> str:
    lines = ["basis " + " ".join(F.names), f"dim {F.dim}"]
    for (i, j) in sorted(F.sc_t):
        terms = [
            _poly_term(p, k + 1) for k, p in enumerate(F.sc_t[(i, j)]) if not p.is_zero()
        ]
        lines.append(f"[{i + 1},{j + 1}] = " + _join_terms(terms))
    return "\n".join(lines) + "\n"


def emit(key: str) -> str:
    """Catalog entry rendered in the file grammar; re-parsing is lossless."""
    entry = _catalog.builtin(key)
    if entry.family is not None:
        return serialize_family(entry.family)
    return serialize_algebra(entry.algebra)
