"""String library with taint-relevant operations.

Handles are fresh locations; their contents are irrelevant to the protocol
so every handle cell holds ``0``.
"""

from typing import List, Tuple

from ..lang.syntax import UNIT, Emit, Expr, Lam, Proj, Ref, Val, Var, call, event, let, lit, seq
from .base import Library, WrapperBuilder


class StringLibrary(Library):
    name = "str"
    lang = "L-str"

    def initial_state(self) -> Expr:
        return lit(0)

    def operations(self) -> List[Tuple[str, Lam]]:
        return [
            ("input", Lam("_", Ref(lit(0)))),
            ("constant", Lam("y", Ref(lit(0)))),
            ("sanitize", Lam("y", Val(UNIT))),
            ("concat", Lam("p", Ref(lit(0)))),
            ("sink", Lam("y", Val(UNIT))),
        ]

    def wrappers(self) -> List[Tuple[str, WrapperBuilder]]:
        y, r, p = Var("y"), Var("r"), Var("p")

        def returning(tag: str, unit_arg: bool):
            def build(raw):
                param = "_" if unit_arg else "y"
                return Lam(param, let("r", call(raw, None if unit_arg else y), seq(Emit(event(tag, r)), r)))
            return build

        def concat(raw):
            # The pair argument is destructured after the call.
            return Lam("p", let("r", call(raw, p), seq(
                Emit(event("concat", r, Proj(1, p), Proj(2, p))),
                r,
            )))

        return [
            ("input", returning("input", unit_arg=True)),
            ("constant", returning("constant", unit_arg=False)),
            ("sanitize", lambda raw: Lam("y", seq(call(raw, y), Emit(event("sanitize", y))))),
            ("concat", concat),
            ("sink", lambda raw: Lam("y", seq(call(raw, y), Emit(event("sink", y))))),
        ]
