"""Collection library with iterators."""

from typing import List, Tuple

from ..lang.syntax import (
    UNIT, App, BinOp, Deref, Emit, Expr, If, Lam, MkPair, Proj, Ref, Val, Var,
    call, event, let, lit, seq,
)
from .base import STATE, Library, WrapperBuilder


def _is_nil(expr: Expr) -> Expr:
    return BinOp("=", expr, Val(UNIT))


def _recursive(step: Lam, start: Expr) -> Expr:
    """Run ``step`` on ``start`` with ``loop`` bound to a cell holding ``step``.

    The body of ``step`` recurses through ``(get loop)``.
    """
    return let("loop", Ref(Val(UNIT)), seq(
        BinOp(":=", Var("loop"), step),
        App(Deref(Var("loop")), start),
    ))


def _recur(arg: Expr) -> Expr:
    return App(Deref(Var("loop")), arg)


class CollectionLibrary(Library):
    """The state cell holds the elements as a nested-pair list.

    ``iterator`` allocates a cursor cell holding the current list and
    returns its location; ``next`` advances the cursor and returns unit
    once the list is exhausted.
    """

    name = "coll"
    lang = "L-coll"

    def initial_state(self):
        return Val(UNIT)

    def operations(self) -> List[Tuple[str, Lam]]:
        st = Var(STATE)
        l = Var("l")
        size = Lam("_", _recursive(
            Lam("l", If(_is_nil(l), lit(0), BinOp("+", lit(1), _recur(Proj(2, l))))),
            Deref(st),
        ))
        add = Lam("a", BinOp(":=", st, MkPair(Var("a"), Deref(st))))
        remove = Lam("a", _assign_from_loop(st, Lam("l", If(
            _is_nil(l),
            Val(UNIT),
            If(
                BinOp("=", Proj(1, l), Var("a")),
                Proj(2, l),
                MkPair(Proj(1, l), _recur(Proj(2, l))),
            ),
        ))))
        iterator = Lam("_", Ref(Deref(st)))
        next_ = Lam("it", let("l", Deref(Var("it")), If(
            _is_nil(l),
            Val(UNIT),
            seq(BinOp(":=", Var("it"), Proj(2, l)), Proj(1, l)),
        )))
        return [("size", size), ("add", add), ("remove", remove), ("iterator", iterator), ("next", next_)]

    def wrappers(self) -> List[Tuple[str, WrapperBuilder]]:
        y, r = Var("y"), Var("r")
        return [
            ("size", lambda raw: Lam("y", let("r", call(raw, y), seq(Emit(lit("size")), r)))),
            ("add", lambda raw: Lam("y", seq(call(raw, y), Emit(lit("add"))))),
            ("remove", lambda raw: Lam("y", seq(call(raw, y), Emit(lit("remove"))))),
            ("iterator", lambda raw: Lam("_", let("r", call(raw), seq(Emit(event("iterator", r)), r)))),
            ("next", lambda raw: Lam("y", let("r", call(raw, y), seq(Emit(event("next", y)), r)))),
        ]


def _assign_from_loop(st: Expr, step: Lam) -> Expr:
    """``st := loop(!st)`` with ``loop`` defined by ``step``."""
    return let("loop", Ref(Val(UNIT)), seq(
        BinOp(":=", Var("loop"), step),
        BinOp(":=", st, App(Deref(Var("loop")), Deref(st))),
    ))
