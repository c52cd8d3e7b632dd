"""S-expression reader and printer for the object language."""

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple, Union

from ..exceptions import ParseError
from .syntax import (
    OPERATORS, UNIT, WILDCARD,
    App, BinOp, Deref, Emit, Expr, FunId, If, Int, Lam, Loc, MkPair, Pair,
    Proj, Ref, Sym, Unit, Val, Value, Var, as_value, seq,
)


logger = logging.getLogger(__name__)

_TOKEN_RE = re.compile(r"\s+|;[^\n]*|\(|\)|[^\s();]+")
_INT_RE = re.compile(r"-?[0-9]+")
_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_\-?!]*")
_SYM_RE = re.compile(r"'([A-Za-z_][A-Za-z0-9_]*)")
_FUN_RE = re.compile(r"#f([0-9]+)")
_LOC_RE = re.compile(r"#l([0-9]+)")

KEYWORDS = frozenset({
    "lam", "app", "if", "pair", "fst", "snd", "ref", "get", "op", "emit",
    "let", "seq", "with-lib",
})


@dataclass(frozen=True)
class _Token:
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class _Node:
    """A parenthesised list with the position of its opening paren."""

    items: Tuple[Union["_Node", _Token, "_Quoted"], ...]
    line: int
    column: int


@dataclass(frozen=True)
class _Quoted:
    """A `#`-prefixed form, read as a literal pair value."""

    item: Union["_Node", _Token, "_Quoted"]
    line: int
    column: int


SExp = Union[_Node, _Token, _Quoted]


@dataclass(frozen=True)
class ClientProgram:
    """A client written as ``(with-lib (n1 ... nk) body)``.

    ``op_names`` are bound positionally to the operations of the library
    the client is linked against.
    """

    op_names: Tuple[str, ...]
    body: Expr


class ProgramParser:
    """Parser for the concrete syntax.

    Unbound variables are not reported here; programs may legitimately
    mention free names that a harness form binds later.
    """

    def parse(self, text: str) -> Expr:
        node = self._read_single(text)
        return self._expr(node)

    def parse_client(self, text: str) -> ClientProgram:
        node = self._read_single(text)
        if isinstance(node, _Node) and node.items and self._head(node) == "with-lib":
            if len(node.items) != 3:
                raise ParseError("with-lib expects an operation list and a body", node.line, node.column)
            names_node = node.items[1]
            if not isinstance(names_node, _Node):
                raise ParseError("with-lib expects a parenthesised list of names", names_node.line, names_node.column)
            names = tuple(self._binder(item, allow_wildcard=True) for item in names_node.items)
            return ClientProgram(op_names=names, body=self._expr(node.items[2]))
        # A bare expression is a client that uses no library operation.
        return ClientProgram(op_names=(), body=self._expr(node))

    def parse_file(self, path: Union[str, Path]) -> ClientProgram:
        text = read_source(path)
        logger.debug(f"Parsing program file {path}")
        return self.parse_client(text)

    # Reader

    def _tokenize(self, text: str) -> List[_Token]:
        tokens = []
        line, line_start = 1, 0
        for match in _TOKEN_RE.finditer(text):
            chunk = match.group(0)
            column = match.start() - line_start + 1
            if not chunk.isspace() and not chunk.startswith(";"):
                tokens.append(_Token(chunk, line, column))
            newlines = chunk.count("\n")
            if newlines:
                line += newlines
                line_start = match.start() + chunk.rfind("\n") + 1
        return tokens

    def _read_single(self, text: str) -> SExp:
        tokens = self._tokenize(text)
        if not tokens:
            raise ParseError("empty program", 1, 1)
        node, pos = self._read(tokens, 0)
        if pos != len(tokens):
            extra = tokens[pos]
            raise ParseError(f"unexpected trailing input {extra.text!r}", extra.line, extra.column)
        return node

    def _read(self, tokens: List[_Token], pos: int) -> Tuple[SExp, int]:
        token = tokens[pos]
        if token.text == ")":
            raise ParseError("unexpected ')'", token.line, token.column)
        if token.text == "#":
            if pos + 1 >= len(tokens):
                raise ParseError("'#' must be followed by a pair", token.line, token.column)
            item, pos = self._read(tokens, pos + 1)
            return _Quoted(item, token.line, token.column), pos
        if token.text != "(":
            return token, pos + 1
        items: List[SExp] = []
        pos += 1
        while True:
            if pos >= len(tokens):
                raise ParseError("unclosed '('", token.line, token.column)
            if tokens[pos].text == ")":
                return _Node(tuple(items), token.line, token.column), pos + 1
            item, pos = self._read(tokens, pos)
            items.append(item)

    # Expressions

    @staticmethod
    def _head(node: _Node) -> Optional[str]:
        first = node.items[0]
        return first.text if isinstance(first, _Token) else None

    def _expr(self, sexp: SExp) -> Expr:
        if isinstance(sexp, _Token):
            return self._atom(sexp)
        if isinstance(sexp, _Quoted):
            value = as_value(self._expr(sexp.item))
            if not isinstance(value, Pair):
                raise ParseError("'#' must prefix a pair of values", sexp.line, sexp.column)
            return Val(value)
        if not sexp.items:
            return Val(UNIT)
        head = self._head(sexp)
        args = sexp.items[1:]

        if head == "lam":
            self._arity(sexp, args, 2)
            return Lam(self._binder(args[0], allow_wildcard=True), self._expr(args[1]))
        if head == "app":
            self._arity(sexp, args, 2)
            return App(self._expr(args[0]), self._expr(args[1]))
        if head == "if":
            self._arity(sexp, args, 3)
            return If(self._expr(args[0]), self._expr(args[1]), self._expr(args[2]))
        if head == "pair":
            self._arity(sexp, args, 2)
            return MkPair(self._expr(args[0]), self._expr(args[1]))
        if head in ("fst", "snd"):
            self._arity(sexp, args, 1)
            return Proj(1 if head == "fst" else 2, self._expr(args[0]))
        if head == "ref":
            self._arity(sexp, args, 1)
            return Ref(self._expr(args[0]))
        if head == "get":
            self._arity(sexp, args, 1)
            return Deref(self._expr(args[0]))
        if head == "op":
            self._arity(sexp, args, 3)
            name = args[0]
            if not isinstance(name, _Token) or name.text not in OPERATORS:
                raise ParseError(f"unknown operator, expected one of {' '.join(OPERATORS)}", name.line, name.column)
            return BinOp(name.text, self._expr(args[1]), self._expr(args[2]))
        if head == "emit":
            self._arity(sexp, args, 1)
            return Emit(self._expr(args[0]))
        if head == "let":
            self._arity(sexp, args, 3)
            return App(Lam(self._binder(args[0], allow_wildcard=True), self._expr(args[2])), self._expr(args[1]))
        if head == "seq":
            if not args:
                raise ParseError("seq expects at least one expression", sexp.line, sexp.column)
            return seq(*(self._expr(arg) for arg in args))
        if head == "with-lib":
            raise ParseError("with-lib is only allowed at the top of a client program", sexp.line, sexp.column)
        raise ParseError(f"unknown form {head!r}" if head else "form must start with a keyword", sexp.line, sexp.column)

    @staticmethod
    def _arity(node: _Node, args, expected: int) -> None:
        if len(args) != expected:
            raise ParseError(
                f"'{node.items[0].text}' expects {expected} argument(s), got {len(args)}",
                node.line, node.column,
            )

    @staticmethod
    def _binder(sexp: SExp, allow_wildcard: bool = False) -> str:
        if isinstance(sexp, _Token):
            if allow_wildcard and sexp.text == WILDCARD:
                return WILDCARD
            if _IDENT_RE.fullmatch(sexp.text) and sexp.text not in KEYWORDS:
                return sexp.text
        raise ParseError("expected an identifier", sexp.line, sexp.column)

    @staticmethod
    def _atom(token: _Token) -> Expr:
        text = token.text
        if _INT_RE.fullmatch(text):
            return Val(Int(int(text)))
        match = _SYM_RE.fullmatch(text)
        if match:
            return Val(Sym(match.group(1)))
        match = _FUN_RE.fullmatch(text)
        if match:
            return Val(FunId(int(match.group(1))))
        match = _LOC_RE.fullmatch(text)
        if match:
            return Val(Loc(int(match.group(1))))
        if _IDENT_RE.fullmatch(text) and text not in KEYWORDS:
            return Var(text)
        raise ParseError(f"invalid token {text!r}", token.line, token.column)


_default_parser = ProgramParser()


def parse(text: str) -> Expr:
    """Parse a single expression from concrete syntax."""
    return _default_parser.parse(text)


def parse_client(text: str) -> ClientProgram:
    return _default_parser.parse_client(text)


def read_source(path: Union[str, Path]) -> str:
    """Read program text as UTF-8.

    Raises:
        ParseError: At the position of the first byte that is not UTF-8
    """
    data = Path(path).read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        good = data[:e.start].decode("utf-8")
        line = good.count("\n") + 1
        column = len(good) - (good.rfind("\n") + 1) + 1
        raise ParseError(f"invalid UTF-8 in {path}", line, column) from e


# Printer

def print_value(value: Value) -> str:
    if isinstance(value, Unit):
        return "()"
    if isinstance(value, Int):
        return str(value.n)
    if isinstance(value, Loc):
        return f"#l{value.id}"
    if isinstance(value, FunId):
        return f"#f{value.id}"
    if isinstance(value, Sym):
        return f"'{value.name}"
    if isinstance(value, Pair):
        return f"(pair {print_value(value.left)} {print_value(value.right)})"
    raise TypeError(f"Not a value: {value!r}")


def print_expr(expr: Expr) -> str:
    """Print an expression in the concrete syntax.

    ``let`` and ``seq`` are recovered from their desugared shape, and a
    pair value prints as ``#(pair a b)`` to keep it apart from ``MkPair``,
    so ``parse(print_expr(e)) == e`` for every expression over parseable
    identifiers.
    """
    if isinstance(expr, Val):
        if isinstance(expr.value, Pair):
            return "#" + print_value(expr.value)
        return print_value(expr.value)
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Lam):
        return f"(lam {expr.param} {print_expr(expr.body)})"
    if isinstance(expr, App):
        if isinstance(expr.fn, Lam):
            if expr.fn.param == WILDCARD:
                parts = [expr.arg]
                rest = expr.fn.body
                while isinstance(rest, App) and isinstance(rest.fn, Lam) and rest.fn.param == WILDCARD:
                    parts.append(rest.arg)
                    rest = rest.fn.body
                parts.append(rest)
                return "(seq " + " ".join(print_expr(p) for p in parts) + ")"
            return f"(let {expr.fn.param} {print_expr(expr.arg)} {print_expr(expr.fn.body)})"
        return f"(app {print_expr(expr.fn)} {print_expr(expr.arg)})"
    if isinstance(expr, If):
        return f"(if {print_expr(expr.cond)} {print_expr(expr.then)} {print_expr(expr.orelse)})"
    if isinstance(expr, MkPair):
        return f"(pair {print_expr(expr.left)} {print_expr(expr.right)})"
    if isinstance(expr, Proj):
        return f"({'fst' if expr.index == 1 else 'snd'} {print_expr(expr.expr)})"
    if isinstance(expr, Ref):
        return f"(ref {print_expr(expr.expr)})"
    if isinstance(expr, Deref):
        return f"(get {print_expr(expr.expr)})"
    if isinstance(expr, BinOp):
        return f"(op {expr.op} {print_expr(expr.left)} {print_expr(expr.right)})"
    if isinstance(expr, Emit):
        return f"(emit {print_expr(expr.expr)})"
    raise TypeError(f"Not an expression: {expr!r}")


def print_client(client: ClientProgram) -> str:
    if not client.op_names:
        return print_expr(client.body)
    return f"(with-lib ({' '.join(client.op_names)}) {print_expr(client.body)})"
