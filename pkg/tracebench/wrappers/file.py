"""File library: open/close/read over a single open flag."""

from typing import List, Tuple

from ..lang.syntax import UNIT, BinOp, Deref, Emit, Lam, Val, Var, call, lit, seq
from .base import STATE, Library, WrapperBuilder


class FileLibrary(Library):
    """The cell holds ``1`` while open and ``0`` while closed.

    Operations never check the flag, so misuse runs to completion and is
    left to the trace monitor.
    """

    name = "file"
    lang = "L-file"

    def initial_state(self):
        return lit(0)

    def operations(self) -> List[Tuple[str, Lam]]:
        st = Var(STATE)
        return [
            ("open", Lam("_", BinOp(":=", st, lit(1)))),
            ("close", Lam("_", BinOp(":=", st, lit(0)))),
            ("read", Lam("_", seq(Deref(st), Val(UNIT)))),
        ]

    def wrappers(self) -> List[Tuple[str, WrapperBuilder]]:
        def after(tag: str) -> WrapperBuilder:
            return lambda raw: Lam("_", seq(call(raw), Emit(lit(tag))))

        return [("open", after("open")), ("close", after("close")), ("read", after("read"))]
