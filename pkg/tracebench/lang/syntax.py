"""
Abstract syntax of the emit-instrumented object language.

Values and expressions are immutable dataclasses; structural equality is the
generated ``__eq__``, which also compares the class, so ``Int(1) != Loc(1)``.
Events emitted by programs are plain values; tuples such as
``<call, push, a>`` are right-nested pairs built with :func:`tup`.
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Tuple, Union


# Values

@dataclass(frozen=True)
class Unit:
    """The unit value ``()``."""

    def __repr__(self) -> str:
        return "Unit()"


@dataclass(frozen=True)
class Int:
    n: int


@dataclass(frozen=True)
class Loc:
    id: int


@dataclass(frozen=True)
class FunId:
    id: int


@dataclass(frozen=True)
class Sym:
    """Symbol atom used as an event tag, e.g. ``'open``."""

    name: str

    def __post_init__(self):
        if not self.name or not self.name.isascii() or not self.name.isidentifier():
            raise ValueError(f"Symbol name must be a non-empty ASCII identifier, got {self.name!r}")


@dataclass(frozen=True)
class Pair:
    left: "Value"
    right: "Value"


Value = Union[Unit, Int, Loc, FunId, Sym, Pair]

UNIT = Unit()

# Binary operator names as written in the concrete syntax.
OPERATORS: Tuple[str, ...] = ("=", ":=", "+", "-", "*", "<")

# Binder name used by the ``seq`` derived form and ``λ_`` parameters. The
# parser never produces a variable reference to it, so it cannot capture.
WILDCARD = "_"


def tup(*values: Value) -> Value:
    """Encode ``<a, b, c>`` as ``Pair(a, Pair(b, c))``."""
    if not values:
        raise ValueError("tup() needs at least one value")
    result = values[-1]
    for value in reversed(values[:-1]):
        result = Pair(value, result)
    return result


def untup(value: Value, arity: int) -> Optional[Tuple[Value, ...]]:
    """Split a right-nested tuple into ``arity`` components, or None."""
    parts = []
    current = value
    for _ in range(arity - 1):
        if not isinstance(current, Pair):
            return None
        parts.append(current.left)
        current = current.right
    parts.append(current)
    return tuple(parts)


def value_list(items) -> Value:
    """Encode a Python sequence as a nested-pair list terminated by unit."""
    result: Value = UNIT
    for item in reversed(list(items)):
        result = Pair(item, result)
    return result


# Expressions

@dataclass(frozen=True)
class Val:
    value: Value


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Lam:
    param: str
    body: "Expr"


@dataclass(frozen=True)
class App:
    fn: "Expr"
    arg: "Expr"


@dataclass(frozen=True)
class If:
    cond: "Expr"
    then: "Expr"
    orelse: "Expr"


@dataclass(frozen=True)
class MkPair:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Proj:
    index: int
    expr: "Expr"

    def __post_init__(self):
        if self.index not in (1, 2):
            raise ValueError(f"Projection index must be 1 or 2, got {self.index}")


@dataclass(frozen=True)
class Ref:
    expr: "Expr"


@dataclass(frozen=True)
class Deref:
    expr: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"

    def __post_init__(self):
        if self.op not in OPERATORS:
            raise ValueError(f"Unknown operator {self.op!r}")


@dataclass(frozen=True)
class Emit:
    expr: "Expr"


Expr = Union[Val, Var, Lam, App, If, MkPair, Proj, Ref, Deref, BinOp, Emit]


# Derived forms

def let(name: str, bound: Expr, body: Expr) -> Expr:
    """``let x = e in e'`` is ``(λx. e') e``."""
    return App(Lam(name, body), bound)


def seq(*exprs: Expr) -> Expr:
    """``e1; e2; ...; en`` as nested wildcard lets."""
    if not exprs:
        raise ValueError("seq() needs at least one expression")
    result = exprs[-1]
    for expr in reversed(exprs[:-1]):
        result = App(Lam(WILDCARD, result), expr)
    return result


def lit(value: Union[Value, int, str, None]) -> Val:
    """Literal shorthand: ints become Int, strings become Sym, None is unit."""
    if value is None:
        return Val(UNIT)
    if isinstance(value, bool):
        raise TypeError("bool is not an object-language value")
    if isinstance(value, int):
        return Val(Int(value))
    if isinstance(value, str):
        return Val(Sym(value))
    return Val(value)


def call(fn: Union[Expr, str], arg: Optional[Expr] = None) -> Expr:
    """``f(a)``; a bare string names a variable and a missing arg is unit."""
    fn_expr = Var(fn) if isinstance(fn, str) else fn
    return App(fn_expr, Val(UNIT) if arg is None else arg)


def event(*parts: Union[Expr, str]) -> Expr:
    """Build an event tuple expression; strings are symbol tags."""
    exprs = [Val(Sym(p)) if isinstance(p, str) else p for p in parts]
    result = exprs[-1]
    for expr in reversed(exprs[:-1]):
        result = MkPair(expr, result)
    return result


# Structural operations

def as_value(expr: Expr) -> Optional[Value]:
    """Return the value an expression denotes syntactically, if any.

    Pairs of values are values (``<u, v>`` is in the value grammar), so a
    ``MkPair`` whose components are values needs no reduction step.
    """
    if isinstance(expr, Val):
        return expr.value
    if isinstance(expr, MkPair):
        left = as_value(expr.left)
        if left is None:
            return None
        right = as_value(expr.right)
        if right is None:
            return None
        return Pair(left, right)
    return None


def free_vars(expr: Expr) -> FrozenSet[str]:
    if isinstance(expr, Val):
        return frozenset()
    if isinstance(expr, Var):
        return frozenset({expr.name})
    if isinstance(expr, Lam):
        return free_vars(expr.body) - {expr.param}
    if isinstance(expr, App):
        return free_vars(expr.fn) | free_vars(expr.arg)
    if isinstance(expr, If):
        return free_vars(expr.cond) | free_vars(expr.then) | free_vars(expr.orelse)
    if isinstance(expr, (MkPair, BinOp)):
        return free_vars(expr.left) | free_vars(expr.right)
    if isinstance(expr, (Proj, Ref, Deref, Emit)):
        return free_vars(expr.expr)
    raise TypeError(f"Not an expression: {expr!r}")


def is_closed(expr: Expr) -> bool:
    return not free_vars(expr)


def subst(expr: Expr, name: str, value: Value) -> Expr:
    """Substitute ``value`` for the free occurrences of ``name``.

    Values contain no variables, so no binder can capture anything; only
    shadowing binders stop the traversal.
    """
    if isinstance(expr, Val):
        return expr
    if isinstance(expr, Var):
        return Val(value) if expr.name == name else expr
    if isinstance(expr, Lam):
        if expr.param == name:
            return expr
        return Lam(expr.param, subst(expr.body, name, value))
    if isinstance(expr, App):
        return App(subst(expr.fn, name, value), subst(expr.arg, name, value))
    if isinstance(expr, If):
        return If(
            subst(expr.cond, name, value),
            subst(expr.then, name, value),
            subst(expr.orelse, name, value),
        )
    if isinstance(expr, MkPair):
        return MkPair(subst(expr.left, name, value), subst(expr.right, name, value))
    if isinstance(expr, Proj):
        return Proj(expr.index, subst(expr.expr, name, value))
    if isinstance(expr, Ref):
        return Ref(subst(expr.expr, name, value))
    if isinstance(expr, Deref):
        return Deref(subst(expr.expr, name, value))
    if isinstance(expr, BinOp):
        return BinOp(expr.op, subst(expr.left, name, value), subst(expr.right, name, value))
    if isinstance(expr, Emit):
        return Emit(subst(expr.expr, name, value))
    raise TypeError(f"Not an expression: {expr!r}")


def alpha_normalize(expr: Expr) -> Expr:
    """Rename every binder to a canonical name in traversal order.

    Two terms are alpha-equivalent iff their normal forms are equal. Free
    variables keep their names; canonical names start with ``%`` so they
    cannot clash with source identifiers.
    """
    counter = [0]

    def go(e: Expr, env: Dict[str, str]) -> Expr:
        if isinstance(e, Val):
            return e
        if isinstance(e, Var):
            return Var(env.get(e.name, e.name))
        if isinstance(e, Lam):
            fresh = f"%{counter[0]}"
            counter[0] += 1
            return Lam(fresh, go(e.body, {**env, e.param: fresh}))
        if isinstance(e, App):
            return App(go(e.fn, env), go(e.arg, env))
        if isinstance(e, If):
            return If(go(e.cond, env), go(e.then, env), go(e.orelse, env))
        if isinstance(e, MkPair):
            return MkPair(go(e.left, env), go(e.right, env))
        if isinstance(e, Proj):
            return Proj(e.index, go(e.expr, env))
        if isinstance(e, Ref):
            return Ref(go(e.expr, env))
        if isinstance(e, Deref):
            return Deref(go(e.expr, env))
        if isinstance(e, BinOp):
            return BinOp(e.op, go(e.left, env), go(e.right, env))
        if isinstance(e, Emit):
            return Emit(go(e.expr, env))
        raise TypeError(f"Not an expression: {e!r}")

    return go(expr, {})


def contains_emit(expr: Expr) -> bool:
    if isinstance(expr, Emit):
        return True
    if isinstance(expr, (Val, Var)):
        return False
    if isinstance(expr, Lam):
        return contains_emit(expr.body)
    if isinstance(expr, App):
        return contains_emit(expr.fn) or contains_emit(expr.arg)
    if isinstance(expr, If):
        return contains_emit(expr.cond) or contains_emit(expr.then) or contains_emit(expr.orelse)
    if isinstance(expr, (MkPair, BinOp)):
        return contains_emit(expr.left) or contains_emit(expr.right)
    if isinstance(expr, (Proj, Ref, Deref)):
        return contains_emit(expr.expr)
    raise TypeError(f"Not an expression: {expr!r}")
