"""Text format for algebras, functionals and polynomial symbols.

    # comment
    dim 6
    basis X1 X2 X3 X4 X5 X6
    param a b
    [X6,X5] = X4
    [X5,X2] = -X1
    xi: X1 -> a, X6 -> b
    symbol: y2*y3 + 1/2*y4^2

Omitted brackets are zero.  Coefficients are rational expressions in the
declared parameters and ``i``.  Parameters used on ``xi``/``symbol`` lines
need no declaration.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DuplicateBracket, OrbitkitError, ParseError, UndeclaredSymbol
from .exact.poly import MultiPoly
from .exact.scalar import I, ScalarExpr, as_scalar
from .lie import LieAlgebra, validate_lie

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9']*)|(?P<arrow>->)|(?P<op>[-+*/^()\[\],:=]))"
)

RESERVED = {"i", "dim", "basis", "param", "xi", "symbol"}


@dataclass
class Token:
    kind: str
    text: str
    col: int


def tokenize(text: str, line: int = 1, col0: int = 1) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos + stripped]!r}", line, col0 + pos + stripped)
        kind = m.lastgroup
        start = m.start(kind)
        out.append(Token(kind, m.group(kind), col0 + start))
        pos = m.end()
    out.append(Token("end", "", col0 + len(text)))
    return out


class _Parser:
    """Pratt parser producing MultiPoly values over ``variables``."""

    BINARY = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 40}

    def __init__(self, tokens, line, variables, params, implicit_params):
        self.toks = tokens
        self.i = 0
        self.line = line
        self.vars = list(variables)
        self.params = set(params)
        self.implicit = implicit_params
        self.used_params: set = set()

    def peek(self) -> Token:
        return self.toks[self.i]

    def next(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None, cls=ParseError):
        tok = tok or self.peek()
        return cls(msg, self.line, tok.col)

    def expect(self, text):
        t = self.next()
        if t.text != text:
            raise self.error(f"expected {text!r}, found {t.text or 'end of line'!r}", t)
        return t

    def const(self, c) -> MultiPoly:
        return MultiPoly.constant(as_scalar(c), len(self.vars), self.vars)

    def expression(self, rbp: int = 0) -> MultiPoly:
        left = self.prefix()
        while True:
            t = self.peek()
            lbp = self.BINARY.get(t.text, 0) if t.kind == "op" else 0
            if lbp <= rbp:
                return left
            self.next()
            if t.text == "^":
                left = self.power(left, t)
            else:
                right = self.expression(lbp)
                left = self.binary(t, left, right)

    def prefix(self) -> MultiPoly:
        t = self.next()
        if t.kind == "num":
            return self.const(Fraction(t.text))
        if t.kind == "name":
            if t.text in self.vars:
                return MultiPoly.var(self.vars.index(t.text), len(self.vars), self.vars)
            if t.text == "i":
                return self.const(I)
            if t.text in self.params or (self.implicit and t.text not in RESERVED):
                self.used_params.add(t.text)
                return self.const(ScalarExpr.parameter(t.text))
            raise self.error(f"undeclared symbol {t.text!r}", t, UndeclaredSymbol)
        if t.text == "-":
            return -self.expression(30)
        if t.text == "+":
            return self.expression(30)
        if t.text == "(":
            v = self.expression()
            self.expect(")")
            return v
        raise self.error(f"unexpected {t.text or 'end of line'!r}", t)

    def binary(self, t, left, right):
        if t.text == "+":
            return left + right
        if t.text == "-":
            return left - right
        if t.text == "*":
            return left * right
        if not right.is_constant():
            raise self.error("division by a non-constant expression", t)
        c = right.constant_term()
        if not c:
            raise self.error("division by zero", t)
        return left / c

    def power(self, base, t):
        e = self.peek()
        neg = False
        if e.text == "-":
            self.next()
            neg = True
            e = self.peek()
        if e.kind != "num" or "." in e.text:
            raise self.error("exponent must be an integer literal", e)
        self.next()
        n = int(e.text)
        if neg:
            if not base.is_constant() or not base.constant_term():
                raise self.error("negative powers need a nonzero constant base", e)
            return self.const(base.constant_term() ** (-n))
        return base**n

    def done(self):
        t = self.peek()
        if t.kind != "end":
            raise self.error(f"unexpected {t.text!r}", t)


def parse_expression(text: str, variables: Sequence[str], params=(), implicit_params=True, line=1, col0=1):
    p = _Parser(tokenize(text, line, col0), line, variables, params, implicit_params)
    v = p.expression()
    p.done()
    return v


def parse_scalar(text: str, params=(), implicit_params=True, line=1, col0=1) -> ScalarExpr:
    return parse_expression(text, [], params, implicit_params, line, col0).constant_term()


@dataclass
class ParsedSpec:
    algebra: LieAlgebra | None = None
    xi: list | None = None
    symbol: MultiPoly | None = None
    params: list = field(default_factory=list)


def _split_names(rest: str, line: int, col0: int) -> list[tuple[str, int]]:
    out = []
    for m in re.finditer(r"[^\s,]+", rest):
        name = m.group()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9']*", name):
            raise ParseError(f"invalid name {name!r}", line, col0 + m.start())
        if name in RESERVED:
            raise ParseError(f"{name!r} is reserved", line, col0 + m.start())
        out.append((name, col0 + m.start()))
    return out


def parse_spec(text: str, symbol_names: Sequence[str] | None = None) -> ParsedSpec:
    dim = None
    basis: list | None = None
    basis_line = 1
    params: list = []
    param_pos: dict = {}
    brackets: dict = {}
    xi_line = None
    symbol_line = None
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        body = line.strip()
        col0 = len(line) - len(line.lstrip()) + 1
        head = body.split(None, 1)[0]
        if head == "dim":
            if dim is not None:
                raise ParseError("dim given twice", ln, col0)
            arg = body[3:].strip()
            if not arg.isdigit() or int(arg) < 1:
                raise ParseError("dim needs a positive integer", ln, col0 + 4)
            dim = int(arg)
        elif head == "basis":
            if basis is not None:
                raise ParseError("basis given twice", ln, col0)
            names = _split_names(body[5:], ln, col0 + 5)
            seen = set()
            for n, c in names:
                if n in seen:
                    raise ParseError(f"basis name {n!r} repeated", ln, c)
                seen.add(n)
            basis = [n for n, _ in names]
            basis_line = ln
        elif head == "param":
            for n, c in _split_names(body[5:], ln, col0 + 5):
                if n in params:
                    raise ParseError(f"parameter {n!r} repeated", ln, c)
                params.append(n)
                param_pos[n] = (ln, c)
        elif body.startswith("xi") and body[2:].lstrip().startswith(":"):
            if xi_line is not None:
                raise ParseError("functional given twice", ln, col0)
            xi_line = (ln, line)
        elif body.startswith("symbol") and body[6:].lstrip().startswith(":"):
            if symbol_line is not None:
                raise ParseError("symbol given twice", ln, col0)
            symbol_line = (ln, line)
        elif body.startswith("["):
            brackets_line = _parse_bracket_line(line, ln)
            key = brackets_line[0]
            rev = (key[1], key[0])
            if key in brackets or rev in brackets:
                first = brackets.get(key) or brackets.get(rev)
                raise DuplicateBracket(
                    f"bracket [{key[0]},{key[1]}] already given on line {first[2]}", ln, col0
                )
            brackets[key] = (brackets_line[1], brackets_line[2], ln, brackets_line[3])
        else:
            raise ParseError(f"unrecognized line starting with {head!r}", ln, col0)
    if basis is None and dim is not None:
        basis = [f"X{k}" for k in range(1, dim + 1)]
    if basis is not None and dim is not None and len(basis) != dim:
        raise ParseError(f"dim is {dim} but {len(basis)} basis names were given", basis_line, 1)
    for p in params:
        if basis and p in basis:
            raise ParseError(f"parameter {p!r} clashes with a basis name", *param_pos[p])
    out = ParsedSpec(params=list(params))
    if basis is not None:
        out.algebra = _build_algebra(basis, params, brackets)
    elif brackets:
        ln = min(v[2] for v in brackets.values())
        raise ParseError("brackets given without a basis", ln, 1)
    if xi_line is not None:
        if basis is None:
            raise ParseError("functional needs a basis", xi_line[0], 1)
        out.xi = _parse_xi_line(xi_line[1], xi_line[0], basis, params)
    if symbol_line is not None:
        names = list(symbol_names) if symbol_names is not None else [f"y{k}" for k in range(1, len(basis or []) + 1)]
        ln, raw = symbol_line
        idx = raw.index(":") + 1
        out.symbol = parse_expression(raw[idx:], names, params, True, ln, idx + 1)
    return out


def _parse_bracket_line(line: str, ln: int):
    toks = tokenize(line, ln)
    p = 0

    def take(kind=None, text=None):
        nonlocal p
        t = toks[p]
        if (kind and t.kind != kind) or (text and t.text != text):
            want = text or kind
            raise ParseError(f"expected {want!r}, found {t.text or 'end of line'!r}", ln, t.col)
        p += 1
        return t

    take(text="[")
    a = take("name")
    take(text=",")
    b = take("name")
    take(text="]")
    eq = take(text="=")
    rhs_col = eq.col + 1
    rhs = line[rhs_col - 1 :]
    return (a.text, b.text), rhs, rhs_col, (a.col, b.col)


def _build_algebra(basis, params, brackets) -> LieAlgebra:
    m = len(basis)
    table = {}
    for (a, b), (rhs, col, ln, name_cols) in brackets.items():
        for name, ncol in zip((a, b), name_cols):
            if name not in basis:
                raise UndeclaredSymbol(f"undeclared basis element {name!r}", ln, ncol)
        v = parse_expression(rhs, basis, params, False, ln, col)
        if v.total_degree() > 1 or v.constant_term():
            raise ParseError("bracket value must be a linear combination of basis elements", ln, col)
        vec = [v.coefficient(tuple(1 if q == k else 0 for q in range(m))) for k in range(m)]
        j, k = basis.index(a), basis.index(b)
        if j == k:
            if any(vec):
                raise ParseError(f"[{a},{a}] must be zero (antisymmetry)", ln, 1)
            continue
        table[(j, k)] = vec
    try:
        return validate_lie(table, basis)
    except ParseError:
        raise
    except OrbitkitError as exc:
        raise ParseError(f"not a nilpotent Lie algebra: {exc}", 0, 0) from exc


def _parse_xi_line(line: str, ln: int, basis, params) -> list:
    idx = line.index(":") + 1
    return parse_functional(line[idx:], basis, params, ln, idx + 1)


def parse_functional(text: str, basis: Sequence[str], params=(), line: int = 1, col0: int = 1) -> list:
    """``X1 -> a, X6 -> b`` (or ``X1->a,X6->b``) as a coefficient list."""
    basis = list(basis)
    xi = [as_scalar(0)] * len(basis)
    seen = set()
    if not text.strip() or text.strip() == "0":
        return xi
    pos = 0
    for part in text.split(","):
        col = col0 + pos
        pos += len(part) + 1
        if "->" not in part:
            raise ParseError("expected 'name -> value'", line, col)
        name, value = part.split("->", 1)
        nm = name.strip()
        ncol = col + len(name) - len(name.lstrip())
        if nm not in basis:
            raise UndeclaredSymbol(f"undeclared basis element {nm!r}", line, ncol)
        if nm in seen:
            raise ParseError(f"{nm!r} assigned twice", line, ncol)
        seen.add(nm)
        vcol = col + len(name) + 2
        xi[basis.index(nm)] = parse_scalar(value, params, True, line, vcol)
    return xi


def parse_symbol(text: str, names: Sequence[str], params=()) -> MultiPoly:
    return parse_expression(text, names, params, True)


def render_functional(xi: Sequence, basis: Sequence[str]) -> str:
    parts = [f"{n} -> {as_scalar(v)}" for n, v in zip(basis, xi) if as_scalar(v)]
    return "xi: " + (", ".join(parts) if parts else "0")


def render_spec(spec: ParsedSpec) -> str:
    lines = []
    if spec.algebra is not None:
        text = spec.algebra.to_dsl()
        lines.append(text.rstrip("\n"))
        if spec.xi is not None:
            lines.append(render_functional(spec.xi, spec.algebra.names))
    if spec.symbol is not None:
        lines.append(f"symbol: {spec.symbol}")
    return "\n".join(lines) + "\n"


def parse_algebra(text: str) -> LieAlgebra:
    spec = parse_spec(text)
    if spec.algebra is None:
        raise ParseError("no algebra in input", 1, 1)
    return spec.algebra
