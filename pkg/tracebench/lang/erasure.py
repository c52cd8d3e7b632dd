"""Erasure: replace every ``emit`` with unit."""

from dataclasses import replace
from typing import Dict, Mapping, Tuple

from .interpreter import Config
from .syntax import (
    UNIT,
    App, BinOp, Deref, Emit, Expr, If, Lam, MkPair, Proj, Ref, Val, Var,
)


def erase(expr: Expr) -> Expr:
    if isinstance(expr, Emit):
        return Val(UNIT)
    if isinstance(expr, (Val, Var)):
        return expr
    if isinstance(expr, Lam):
        return Lam(expr.param, erase(expr.body))
    if isinstance(expr, App):
        return App(erase(expr.fn), erase(expr.arg))
    if isinstance(expr, If):
        return If(erase(expr.cond), erase(expr.then), erase(expr.orelse))
    if isinstance(expr, MkPair):
        return MkPair(erase(expr.left), erase(expr.right))
    if isinstance(expr, Proj):
        return Proj(expr.index, erase(expr.expr))
    if isinstance(expr, Ref):
        return Ref(erase(expr.expr))
    if isinstance(expr, Deref):
        return Deref(erase(expr.expr))
    if isinstance(expr, BinOp):
        return BinOp(expr.op, erase(expr.left), erase(expr.right))
    raise TypeError(f"Not an expression: {expr!r}")


def erase_env(fenv: Mapping[int, Tuple[str, Expr]]) -> Dict[int, Tuple[str, Expr]]:
    return {fid: (param, erase(body)) for fid, (param, body) in fenv.items()}


def erase_config(config: Config) -> Config:
    """Erase the expression and every function body; the heap is untouched."""
    return replace(config, expr=erase(config.expr), fenv=erase_env(config.fenv))
