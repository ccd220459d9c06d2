"""A small expression language for permutations, classes and triples.

Grammar (whitespace-insensitive, LL(1) over the token stream)::

    expr    := postfix ('*' postfix)*
    postfix := primary ('^-1')*
    primary := INT | STRING | CYCLES | NAME
             | NAME ('[' INT (',' INT)* ']')? '(' args? ')'
             | '(' expr (',' expr)* ','? ')'
             | '[' args? ']'
    args    := expr (',' expr)*

``^-1`` binds tighter than ``*``, and ``*`` associates to the left, so
``alpha * lambda ^-1`` is ``compose(alpha, inverse(lambda))``. ``a * b``
applies ``b`` first. Cycle notation such as ``(1 3)(2 5 6 4)`` is lexed as a
single token; a parenthesis directly after a name or ``]`` always opens an
argument list.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .classes import SYMFIN, TRIVIAL, UNIVERSE, E, GroupClass, H, section_into_stabilizer, sym
from .houghton import (
    FiniteSet,
    HoughtonElement,
    Point,
    Triple,
    beta,
    chi,
    collapse_finite,
    embed_gn,
    eval_triple,
    general_expand,
    invert_triple,
    make_triple,
    minimal_triple,
    multiply,
)
from .houghton.io import element_from_dict, triple_from_dict
from .perm import ALPHA, IDENTITY, LAMBDA, EPPerm, Germ, apply, compose, conj, cycle_preview, from_dict, germ
from .perm import germ_equals, inverse
from .perm import mk_periodic, parse_cycles
from .shift import insert_arrow, psi


class DSLError(ValueError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        where = f"{line}:{col}: " if line else ""
        super().__init__(where + message)
        self.line, self.col = line, col


class ParseError(DSLError):
    pass


class EvalError(DSLError):
    pass


# -- lexer ---------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<inv>\^\s*-\s*1(?!\d))
  | (?P<cycles>(?:\(\s*\d+(?:\s+\d+)*\s*\))+|\(\s*\))
  | (?P<int>-?\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<punct>[*()\[\],])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        col = pos - line_start + 1
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind == "cycles" and tokens and tokens[-1].kind in ("name", "]"):
            # call parenthesis, not cycle notation
            kind, chunk = "punct", "("
        if kind == "punct":
            kind = chunk
        if kind != "ws":
            tokens.append(Token(kind, chunk, line, col))
        for i, ch in enumerate(chunk):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos += len(chunk)
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


# -- syntax tree ---------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Str:
    value: str


@dataclass(frozen=True)
class Cycles:
    text: str


@dataclass(frozen=True)
class Name:
    name: str


@dataclass(frozen=True)
class ListLit:
    items: tuple


@dataclass(frozen=True)
class TupleLit:
    items: tuple


@dataclass(frozen=True)
class Call:
    name: str
    params: tuple[int, ...]
    args: tuple


@dataclass(frozen=True)
class Mul:
    left: Any
    right: Any


@dataclass(frozen=True)
class Inv:
    operand: Any


Expr = Num | Str | Cycles | Name | ListLit | TupleLit | Call | Mul | Inv

CONSTANTS = {"id", "alpha", "lambda", "trivial", "symfin", "universe", "true", "false"}
# name -> (bracket parameters, arguments)
ARITY: dict[str, tuple[int, int]] = {
    "periodic": (0, 3),
    "sym": (0, 1),
    "E": (0, 1),
    "H": (0, 1),
    "triple": (0, 6),
    "load": (0, 1),
    "psi": (1, 1),
    "insert": (2, 1),
    "expand": (2, 1),
    "section": (1, 2),
    "germ": (0, 1),
    "same_germ": (0, 2),
    "apply": (0, 2),
    "conj": (0, 2),
    "eval": (0, 1),
    "minimal": (0, 2),
    "embed": (0, 2),
    "elem": (0, 2),
    "beta": (0, 4),
    "chi": (0, 1),
    "collapse": (0, 1),
}


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.col)

    def eat(self, kind: str) -> Token:
        tok = self.tok
        if tok.kind != kind:
            found = tok.text or "end of input"
            raise self.error(f"expected {kind!r}, found {found!r}")
        self.i += 1
        return tok

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.text!r}")
        return e

    def expr(self) -> Expr:
        e = self.postfix()
        while self.tok.kind == "*":
            self.eat("*")
            e = Mul(e, self.postfix())
        return e

    def postfix(self) -> Expr:
        e = self.primary()
        while self.tok.kind == "inv":
            self.eat("inv")
            e = Inv(e)
        return e

    def args(self, close: str) -> list[Expr]:
        items: list[Expr] = []
        if self.tok.kind != close:
            items.append(self.expr())
            while self.tok.kind == ",":
                self.eat(",")
                items.append(self.expr())
        self.eat(close)
        return items

    def primary(self) -> Expr:
        tok = self.tok
        if tok.kind == "int":
            self.eat("int")
            return Num(int(tok.text))
        if tok.kind == "string":
            self.eat("string")
            return Str(json.loads(tok.text))
        if tok.kind == "cycles":
            self.eat("cycles")
            return Cycles(re.sub(r"\s+", " ", tok.text))
        if tok.kind == "[":
            self.eat("[")
            return ListLit(tuple(self.args("]")))
        if tok.kind == "(":
            self.eat("(")
            items = [self.expr()]
            trailing = False
            while self.tok.kind == ",":
                self.eat(",")
                if self.tok.kind == ")":
                    trailing = True
                    break
                items.append(self.expr())
            self.eat(")")
            return items[0] if len(items) == 1 and not trailing else TupleLit(tuple(items))
        if tok.kind == "name":
            return self.named()
        raise self.error(f"unexpected {tok.text or 'end of input'!r}")

    def named(self) -> Expr:
        tok = self.eat("name")
        name = tok.text
        if name in CONSTANTS:
            return Name(name)
        if name not in ARITY:
            raise self.error(f"unknown identifier {name!r}", tok)
        n_params, n_args = ARITY[name]
        params: list[int] = []
        if self.tok.kind == "[":
            self.eat("[")
            params.append(self._int())
            while self.tok.kind == ",":
                self.eat(",")
                params.append(self._int())
            self.eat("]")
        if len(params) != n_params:
            raise self.error(f"{name} takes {n_params} bracket parameter(s), got {len(params)}", tok)
        self.eat("(")
        args = self.args(")")
        if len(args) != n_args:
            raise self.error(f"{name} takes {n_args} argument(s), got {len(args)}", tok)
        return Call(name, tuple(params), tuple(args))

    def _int(self) -> int:
        return int(self.eat("int").text)


def parse(text: str) -> Expr:
    return _Parser(text).parse()


# -- evaluation ----------------------------------------------------------------

Value = Any


def _load(path: str, base: Path) -> Value:
    target = Path(path)
    if not target.is_absolute():
        target = base / target
    try:
        data = json.loads(target.read_text())
    except OSError as exc:
        raise EvalError(f"cannot read {target}: {exc.strerror}") from exc
    return load_value(data)


def load_value(data: Any) -> Value:
    """Decode a JSON permutation, element or triple."""
    if isinstance(data, dict):
        if "flat" in data:
            return element_from_dict(data)
        if "gs" in data:
            return triple_from_dict(data)
        if "table" in data:
            return from_dict(data)
    raise EvalError("JSON value is not a permutation, element or triple")


def _expect(value: Value, kind: type | tuple, what: str) -> Value:
    if not isinstance(value, kind):
        raise EvalError(f"{what}: unexpected {type(value).__name__}")
    return value


def _point(v: Value) -> Point:
    if isinstance(v, tuple) and len(v) == 2 and all(isinstance(x, int) for x in v):
        return Point(*v)
    raise EvalError(f"expected a point (k, i), got {v!r}")


def mul_values(a: Value, b: Value) -> Value:
    if type(a) is not type(b):
        raise EvalError(f"cannot multiply {type(a).__name__} by {type(b).__name__}")
    if isinstance(a, EPPerm):
        return compose(a, b)
    if isinstance(a, (Germ, HoughtonElement)):
        return a * b
    if isinstance(a, Triple):
        return multiply(a, b)
    raise EvalError(f"cannot multiply values of type {type(a).__name__}")


def invert_value(a: Value) -> Value:
    if isinstance(a, EPPerm):
        return inverse(a)
    if isinstance(a, Germ):
        return Germ(inverse(a.rep))
    if isinstance(a, HoughtonElement):
        return a.inverse()
    if isinstance(a, Triple):
        return invert_triple(a)
    raise EvalError(f"cannot invert a value of type {type(a).__name__}")


def shift_value(x: Value, j: int) -> Value:
    if isinstance(x, EPPerm):
        return psi(x, j)
    if isinstance(x, Germ):
        return germ(psi(x.rep, j))
    if isinstance(x, Triple):
        x = x.element
    if isinstance(x, HoughtonElement):
        return HoughtonElement(x.n, psi(x.flat, j))
    raise EvalError(f"psi is not defined on {type(x).__name__}")


_CONST_VALUES = {
    "id": IDENTITY,
    "alpha": ALPHA,
    "lambda": LAMBDA,
    "trivial": TRIVIAL,
    "symfin": SYMFIN,
    "universe": UNIVERSE,
    "true": True,
    "false": False,
}


class Evaluator:
    def __init__(self, base: Path | str = "."):
        self.base = Path(base)

    def __call__(self, e: Expr) -> Value:
        if isinstance(e, Num):
            return e.value
        if isinstance(e, Str):
            return e.value
        if isinstance(e, Cycles):
            return parse_cycles(e.text)
        if isinstance(e, Name):
            return _CONST_VALUES[e.name]
        if isinstance(e, ListLit):
            return [self(x) for x in e.items]
        if isinstance(e, TupleLit):
            return tuple(self(x) for x in e.items)
        if isinstance(e, Mul):
            return mul_values(self(e.left), self(e.right))
        if isinstance(e, Inv):
            return invert_value(self(e.operand))
        if isinstance(e, Call):
            return self.call(e)
        raise EvalError(f"unknown node {e!r}")

    def call(self, e: Call) -> Value:
        name, params = e.name, e.params
        if name == "load":
            return _load(_expect(self(e.args[0]), str, "load"), self.base)
        args = [self(a) for a in e.args]
        if name == "periodic":
            p, T, table = args
            return mk_periodic(p, T, table)
        if name in ("sym", "E", "H"):
            return {"sym": sym, "E": E, "H": H}[name](_expect(args[0], int, name))
        if name == "triple":
            n, cls, minus, sigma, gs, plus = args
            _expect(cls, GroupClass, "triple class")
            pairs = [(_point(a), _point(b)) for a, b in sigma]
            return make_triple(n, [_point(q) for q in minus], pairs, gs, [_point(q) for q in plus], cls)
        if name == "psi":
            return shift_value(args[0], params[0])
        if name == "insert":
            return insert_arrow(_expect(args[0], EPPerm, "insert"), *params)
        if name == "expand":
            return general_expand(_expect(args[0], Triple, "expand"), *params)
        if name == "section":
            cls, g = args
            return section_into_stabilizer(_expect(cls, GroupClass, "section"), g, params[0])
        if name == "germ":
            return germ(_expect(args[0], EPPerm, "germ"))
        if name == "same_germ":
            a, b = (germ(x) if isinstance(x, EPPerm) else _expect(x, Germ, "same_germ") for x in args)
            return germ_equals(a, b)
        if name == "apply":
            g, i = args
            if isinstance(g, Triple):
                g = g.element
            if isinstance(g, HoughtonElement):
                return tuple(g(_point(i)))
            return apply(_expect(g, EPPerm, "apply"), _expect(i, int, "apply"))
        if name == "conj":
            x, y = args
            if isinstance(x, EPPerm) and isinstance(y, EPPerm):
                return conj(x, y)
            return mul_values(mul_values(invert_value(y), x), y)
        if name == "eval":
            return eval_triple(_expect(args[0], Triple, "eval"))
        if name == "minimal":
            x, cls = args
            if isinstance(x, Triple):
                x = x.element
            return minimal_triple(_expect(x, HoughtonElement, "minimal"), _expect(cls, GroupClass, "minimal"))
        if name == "embed":
            cls, gs = args
            return embed_gn(gs, _expect(cls, GroupClass, "embed"))
        if name == "elem":
            n, g = args
            return HoughtonElement(n, _expect(g, EPPerm, "elem"))
        if name == "beta":
            n, pts, k, j = args
            return tuple(beta(FiniteSet(n, tuple(_point(q) for q in pts)), k, j))
        if name == "chi":
            return chi(_expect(args[0], Triple, "chi"))
        if name == "collapse":
            return collapse_finite(_expect(args[0], Triple, "collapse"))
        raise EvalError(f"unknown operation {name!r}")


def evaluate(text: str, base: Path | str = ".") -> Value:
    return Evaluator(base)(parse(text))


# -- printing ------------------------------------------------------------------


def format_expr(v: Value) -> str:
    """Source text that evaluates back to ``v``."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, EPPerm):
        if v.is_identity:
            return "id"
        if v.p == 1:
            return cycle_preview(v, v.T)
        return f"periodic({v.p}, {v.T}, [{', '.join(map(str, v.table))}])"
    if isinstance(v, GroupClass):
        return str(v)
    if isinstance(v, Germ):
        return f"germ({format_expr(v.rep)})"
    if isinstance(v, HoughtonElement):
        return f"elem({v.n}, {format_expr(v.flat)})"
    if isinstance(v, Triple):
        pts = lambda S: "[" + ", ".join(_fmt_point(q) for q in S) + "]"  # noqa: E731
        sigma = "[" + ", ".join(f"({_fmt_point(a)}, {_fmt_point(b)})" for a, b in v.sigma.pairs) + "]"
        gs = "[" + ", ".join(format_expr(g) for g in v.gs) + "]"
        return f"triple({v.n}, {v.cls}, {pts(v.minus)}, {sigma}, {gs}, {pts(v.plus)})"
    if isinstance(v, tuple):
        body = ", ".join(format_expr(x) for x in v)
        return f"({body},)" if len(v) == 1 else f"({body})"
    if isinstance(v, list):
        return "[" + ", ".join(format_expr(x) for x in v) + "]"
    raise EvalError(f"no source form for {type(v).__name__}")


def _fmt_point(q: Point) -> str:
    return f"({q.ray}, {q.index})"
