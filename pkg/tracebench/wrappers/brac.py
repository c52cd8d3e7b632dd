"""Bracketing library: a resource acquired for the duration of a callback."""

from typing import List, Tuple

from ..lang.syntax import UNIT, Emit, Lam, Val, Var, call, event, seq
from .base import Library, WrapperBuilder


class BracketLibrary(Library):
    name = "brac"
    lang = "L-brac"

    def initial_state(self):
        return Val(UNIT)

    def operations(self) -> List[Tuple[str, Lam]]:
        return [
            ("withRes", Lam("f", call(Var("f")))),
            ("op", Lam("_", Val(UNIT))),
        ]

    def wrappers(self) -> List[Tuple[str, WrapperBuilder]]:
        f, x = Var("f"), Var("x")

        def with_res(raw):
            callback = Lam("x", seq(
                Emit(event("call", f)),
                call(f, x),
                Emit(event("ret", f)),
            ))
            return Lam("f", seq(
                Emit(event("call", "withRes", f)),
                call(raw, callback),
                Emit(event("ret", "withRes", f)),
            ))

        def op(raw):
            return Lam("x", seq(
                Emit(event("call", "op")),
                call(raw, x),
                Emit(event("ret", "op")),
            ))

        return [("withRes", with_res), ("op", op)]
