"""Expression language over the algebra: lexer, Pratt-style parser, evaluator.

Grammar, loosest to tightest binding:

    expr     := mul (("+" | "-") mul)*
    mul      := contract ("*" contract)*
    contract := wedge (("_|" | "|_") wedge)*        # left contraction, right contraction
    wedge    := unary ("^" unary)*
    unary    := ("-" | "~" | "'" | "!c" | "!" | "!!") unary | primary
    primary  := "(" expr ")" | call | atom | literal [atom]

Atoms are e1..en, t1..tn, s1..s2n (orthonormal basis vectors), `sigma` (the
orientation element), and REPL-bound names.  Literals are nonnegative
rationals `p` or `p/q` and the unit `r2` = sqrt(2); a rational immediately
followed by `r2` is one sqrt(2)-multiple literal, and a literal immediately
followed by an atom multiplies it (canonical output like `2t1` or `1/2 e2`).
Calls: ip(u,v), grade(u,r), even(u), odd(u), dual(u), idual(u).  There is no
juxtaposition product between atoms and no division operator; `*` is the
geometric product and is mandatory between non-literal factors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .hyperspace import sigma_basis
from .multivector import (
    AlgebraContext,
    Multivector,
    bilinear,
    gp,
    hodge,
    hodge_inv,
    lcontract,
    rcontract,
    wedge,
)
from .scalar import Scalar, format_scalar


class ParseError(ValueError):
    """Lexical or syntactic failure, annotated with 1-based line and column."""

    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


# -- AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class Lit:
    value: Scalar


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Unary:
    op: str
    arg: "Expr"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple["Expr", ...]


Expr = Lit | Atom | Unary | Binary | Call

FUNCTIONS = ("ip", "grade", "even", "odd", "dual", "idual")
RESERVED = FUNCTIONS + ("sigma", "r2")

# identifiers exclude "_" so the contraction operators _| and |_ lex cleanly
_NUMBER = re.compile(r"\d+(?:/\d+)?")
_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9]*")
_GENERATOR = re.compile(r"([ets])([1-9][0-9]*)\Z")

_TWO_CHAR_OPS = ("_|", "|_", "!!", "!c")
_ONE_CHAR_OPS = "+-*^~'!(),"


@dataclass(frozen=True)
class _Token:
    kind: str  # NUM, R2, NAME, OP, END
    text: str
    line: int
    col: int


def _lex(src: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i = 0
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        two = src[i : i + 2]
        if two in _TWO_CHAR_OPS:
            if two == "!c" and i + 2 < len(src) and (src[i + 2].isalnum() or src[i + 2] == "_"):
                pass  # "!conj..." is "!" followed by a name
            else:
                tokens.append(_Token("OP", two, line, col))
                i += 2
                col += 2
                continue
        if ch.isdigit():
            m = _NUMBER.match(src, i)
            text = m.group(0)
            tokens.append(_Token("NUM", text, line, col))
            i += len(text)
            col += len(text)
            continue
        if ch.isalpha():
            m = _IDENT.match(src, i)
            text = m.group(0)
            kind = "R2" if text == "r2" else "NAME"
            tokens.append(_Token(kind, text, line, col))
            i += len(text)
            col += len(text)
            continue
        if ch in _ONE_CHAR_OPS:
            tokens.append(_Token("OP", ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("END", "", line, col))
    return tokens


_MAX_DEPTH = 100  # nesting guard: fail with a ParseError, never a RecursionError


class _Parser:
    def __init__(self, tokens: Sequence[_Token], ctx: AlgebraContext, names: frozenset[str]):
        self.tokens = tokens
        self.pos = 0
        self.ctx = ctx
        self.names = names
        self.depth = 0

    def _descend(self, tok: _Token) -> None:
        self.depth += 1
        if self.depth > _MAX_DEPTH:
            raise ParseError("expression nested too deeply", tok.line, tok.col)

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, text: str) -> _Token:
        tok = self.peek()
        if tok.kind != "OP" or tok.text != text:
            raise ParseError(f"expected {text!r}", tok.line, tok.col)
        return self.advance()

    def at_op(self, *texts: str) -> bool:
        tok = self.peek()
        return tok.kind == "OP" and tok.text in texts

    # precedence levels, loosest first
    def parse_expr(self) -> Expr:
        node = self.parse_mul()
        while self.at_op("+", "-"):
            op = self.advance().text
            node = Binary(op, node, self.parse_mul())
        return node

    def parse_mul(self) -> Expr:
        node = self.parse_contract()
        while self.at_op("*"):
            self.advance()
            node = Binary("*", node, self.parse_contract())
        return node

    def parse_contract(self) -> Expr:
        node = self.parse_wedge()
        while self.at_op("_|", "|_"):
            op = self.advance().text
            node = Binary(op, node, self.parse_wedge())
        return node

    def parse_wedge(self) -> Expr:
        node = self.parse_unary()
        while self.at_op("^"):
            self.advance()
            node = Binary("^", node, self.parse_unary())
        return node

    def parse_unary(self) -> Expr:
        if self.at_op("-", "~", "'", "!c", "!", "!!"):
            tok = self.advance()
            self._descend(tok)
            try:
                return Unary("neg" if tok.text == "-" else tok.text, self.parse_unary())
            finally:
                self.depth -= 1
        return self.parse_primary()

    def parse_primary(self) -> Expr:
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "(":
            self.advance()
            self._descend(tok)
            try:
                node = self.parse_expr()
            finally:
                self.depth -= 1
            closing = self.peek()
            if not self.at_op(")"):
                raise ParseError("unbalanced parenthesis", closing.line, closing.col)
            self.advance()
            return node
        if tok.kind == "NUM":
            self.advance()
            value = self._fraction(tok)
            if self.peek().kind == "R2":
                self.advance()
                lit = Lit(Scalar(0, value))
            else:
                lit = Lit(Scalar(value))
            return self._maybe_juxtapose(lit)
        if tok.kind == "R2":
            self.advance()
            return self._maybe_juxtapose(Lit(Scalar(0, 1)))
        if tok.kind == "NAME":
            self.advance()
            if tok.text in FUNCTIONS:
                return self._parse_call(tok)
            return self._atom(tok)
        raise ParseError(f"unexpected {tok.text!r}" if tok.text else "unexpected end of input", tok.line, tok.col)

    def _fraction(self, tok: _Token) -> Fraction:
        if "/" in tok.text:
            num, den = tok.text.split("/")
            if int(den) == 0:
                raise ParseError("zero denominator", tok.line, tok.col)
            return Fraction(int(num), int(den))
        return Fraction(int(tok.text))

    def _maybe_juxtapose(self, lit: Lit) -> Expr:
        tok = self.peek()
        if tok.kind == "NAME" and tok.text not in FUNCTIONS:
            self.advance()
            return Binary("*", lit, self._atom(tok))
        return lit

    def _atom(self, tok: _Token) -> Atom:
        name = tok.text
        if name == "sigma" or name in self.names:
            return Atom(name)
        m = _GENERATOR.match(name)
        if m:
            kind, num = m.group(1), int(m.group(2))
            bound = 2 * self.ctx.dim_n if kind == "s" else self.ctx.dim_n
            if num > bound:
                raise ParseError(
                    f"index out of range: {name} (dim {self.ctx.dim_n})", tok.line, tok.col
                )
            return Atom(name)
        raise ParseError(f"unknown atom {name!r}", tok.line, tok.col)

    def _parse_call(self, tok: _Token) -> Call:
        fn = tok.text
        self.expect_op("(")
        self._descend(tok)
        try:
            args = [self.parse_expr()]
            while self.at_op(","):
                self.advance()
                args.append(self.parse_expr())
        finally:
            self.depth -= 1
        closing = self.peek()
        if not self.at_op(")"):
            raise ParseError("unbalanced parenthesis", closing.line, closing.col)
        self.advance()
        arity = 2 if fn in ("ip", "grade") else 1
        if len(args) != arity:
            raise ParseError(f"{fn} takes {arity} argument(s)", tok.line, tok.col)
        return Call(fn, tuple(args))


def parse(src: str, ctx: AlgebraContext, names: Iterable[str] = ()) -> Expr:
    """Parse source text into an AST; atom indices are validated against ctx."""
    parser = _Parser(_lex(src), ctx, frozenset(names))
    node = parser.parse_expr()
    tail = parser.peek()
    if tail.kind != "END":
        raise ParseError(f"unexpected {tail.text!r}", tail.line, tail.col)
    return node


# -- evaluation --------------------------------------------------------------------

_UNARY_FNS = {
    "neg": lambda u: -u,
    "~": lambda u: u.reversion(),
    "'": lambda u: u.grade_involution(),
    "!c": lambda u: u.conjugation(),
    "!": hodge,
    "!!": hodge_inv,
}

_BINARY_FNS = {
    "+": lambda a, b: a + b,
    "-": lambda a, b: a - b,
    "*": gp,
    "^": wedge,
    "_|": lcontract,
    "|_": rcontract,
}


def evaluate(
    node: Expr, ctx: AlgebraContext, env: Mapping[str, Multivector] | None = None
) -> Multivector:
    """Exact value of an AST as a Multivector of ctx."""
    env = env or {}
    if isinstance(node, Lit):
        return ctx.scalar(node.value)
    if isinstance(node, Atom):
        return _atom_value(node.name, ctx, env)
    if isinstance(node, Unary):
        return _UNARY_FNS[node.op](evaluate(node.arg, ctx, env))
    if isinstance(node, Binary):
        return _BINARY_FNS[node.op](evaluate(node.left, ctx, env), evaluate(node.right, ctx, env))
    if isinstance(node, Call):
        args = [evaluate(a, ctx, env) for a in node.args]
        if node.fn == "ip":
            return ctx.scalar(bilinear(args[0], args[1]))
        if node.fn == "grade":
            r = args[1]
            val = r.scalar_part()
            if r.terms and (set(r.terms) != {0}):
                raise ValueError("grade selector must be an integer")
            if val.sqrt2_part != 0 or val.rat_part.denominator != 1:
                raise ValueError("grade selector must be an integer")
            return args[0].grade_part(int(val.rat_part))
        if node.fn == "even":
            return args[0].even_part()
        if node.fn == "odd":
            return args[0].odd_part()
        if node.fn == "dual":
            return hodge(args[0])
        if node.fn == "idual":
            return hodge_inv(args[0])
    raise TypeError(f"not an expression node: {node!r}")


def _atom_value(name: str, ctx: AlgebraContext, env: Mapping[str, Multivector]) -> Multivector:
    if name in env:
        return env[name]
    if name == "sigma":
        return ctx.orientation()
    kind, num = name[0], int(name[1:])
    if kind == "e":
        return ctx.e(num)
    if kind == "t":
        return ctx.t(num)
    return sigma_basis(ctx)[num - 1].to_multivector()


def eval_source(
    src: str, ctx: AlgebraContext, env: Mapping[str, Multivector] | None = None
) -> Multivector:
    return evaluate(parse(src, ctx, env or {}), ctx, env)


# -- AST printing -------------------------------------------------------------------

_LEVEL = {"+": 1, "-": 1, "*": 2, "_|": 3, "|_": 3, "^": 4}
_UNARY_LEVEL = 5
_PRIMARY_LEVEL = 6

_UNARY_GLYPH = {"neg": "-", "~": "~", "'": "'", "!c": "!c", "!": "!", "!!": "!!"}


def _lit_level(value: Scalar) -> int:
    mixed = value.rat_part != 0 and value.sqrt2_part != 0
    if mixed:
        return 1
    return _PRIMARY_LEVEL if value.sign() >= 0 else _UNARY_LEVEL


def unparse(node: Expr) -> str:
    """Deterministic text whose parse is an equal AST."""
    text, _ = _unparse(node)
    return text


def _unparse(node: Expr) -> tuple[str, int]:
    if isinstance(node, Lit):
        return format_scalar(node.value), _lit_level(node.value)
    if isinstance(node, Atom):
        return node.name, _PRIMARY_LEVEL
    if isinstance(node, Unary):
        body, lvl = _unparse(node.arg)
        # parenthesize nested unaries too: "!" + "!u" would lex as "!!u"
        if lvl <= _UNARY_LEVEL:
            body = f"({body})"
        glyph = _UNARY_GLYPH[node.op]
        space = " " if glyph in ("!c",) else ""
        return f"{glyph}{space}{body}", _UNARY_LEVEL
    if isinstance(node, Binary):
        lvl = _LEVEL[node.op]
        left, llvl = _unparse(node.left)
        right, rlvl = _unparse(node.right)
        if llvl < lvl:
            left = f"({left})"
        if rlvl <= lvl:  # left-assoc: parenthesize right at the same level
            right = f"({right})"
        return f"{left} {node.op} {right}", lvl
    if isinstance(node, Call):
        args = ", ".join(_unparse(a)[0] for a in node.args)
        return f"{node.fn}({args})", _PRIMARY_LEVEL
    raise TypeError(f"not an expression node: {node!r}")
