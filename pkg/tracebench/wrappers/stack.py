"""Stack libraries: push/pop/foreach and the push/pop-only variant."""

from typing import List, Tuple

from ..lang.syntax import (
    UNIT, App, BinOp, Deref, Emit, Expr, If, Lam, MkPair, Proj, Ref, Val, Var,
    call, event, let, seq,
)
from .base import STATE, Library, WrapperBuilder


def _push() -> Lam:
    st = Var(STATE)
    return Lam("a", BinOp(":=", st, MkPair(Var("a"), Deref(st))))


def _pop() -> Lam:
    st, l = Var(STATE), Var("l")
    return Lam("_", let("l", Deref(st), If(
        BinOp("=", l, Val(UNIT)),
        Val(UNIT),
        seq(BinOp(":=", st, Proj(2, l)), Proj(1, l)),
    )))


def _foreach() -> Lam:
    """Apply ``f`` to every element top-first, recursing through a cell."""
    st, l, loop = Var(STATE), Var("l"), Var("loop")
    step = Lam("l", If(
        BinOp("=", l, Val(UNIT)),
        Val(UNIT),
        seq(call(Var("f"), Proj(1, l)), App(Deref(loop), Proj(2, l))),
    ))
    return Lam("f", let("loop", Ref(Val(UNIT)), seq(
        BinOp(":=", loop, step),
        App(Deref(loop), Deref(st)),
    )))


class StackLibrary(Library):
    """The state cell holds the stack as a nested-pair list, top first."""

    name = "stack"
    lang = "L-stack"

    def initial_state(self) -> Expr:
        return Val(UNIT)

    def operations(self) -> List[Tuple[str, Lam]]:
        return [("push", _push()), ("pop", _pop()), ("foreach", _foreach())]

    def wrappers(self) -> List[Tuple[str, WrapperBuilder]]:
        a, f, x = Var("a"), Var("f"), Var("x")

        def push(raw):
            return Lam("a", seq(
                Emit(event("call", "push", a)),
                call(raw, a),
                Emit(event("ret", "push")),
            ))

        def pop(raw):
            return Lam("_", seq(
                Emit(event("call", "pop")),
                let("x", call(raw), seq(Emit(event("ret", "pop", x)), x)),
            ))

        def foreach(raw):
            callback = Lam("a", seq(
                Emit(event("call", f, a)),
                call(f, a),
                Emit(event("ret", f)),
            ))
            return Lam("f", seq(
                Emit(event("call", "foreach", f)),
                call(raw, callback),
                Emit(event("ret", "foreach")),
            ))

        return [("push", push), ("pop", pop), ("foreach", foreach)]


class SimpleStackLibrary(Library):
    name = "stack-simple"
    lang = "L-stack-simple"

    def initial_state(self) -> Expr:
        return Val(UNIT)

    def operations(self) -> List[Tuple[str, Lam]]:
        return [("push", _push()), ("pop", _pop())]

    def wrappers(self) -> List[Tuple[str, WrapperBuilder]]:
        v, r = Var("v"), Var("r")
        return [
            ("push", lambda raw: Lam("v", seq(call(raw, v), Emit(event("push", v))))),
            ("pop", lambda raw: Lam("_", let("r", call(raw), seq(Emit(event("pop", r)), r)))),
        ]
