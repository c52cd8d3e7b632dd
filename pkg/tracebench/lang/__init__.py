"""Object language: syntax, concrete syntax, interpreter and erasure."""

from .erasure import erase, erase_config, erase_env
from .interpreter import (
    Config, Next, RunResult, RunStatus, StepResult, Stuck, Terminal,
    initial_config, run, run_program, step,
)
from .parser import (
    ClientProgram, ProgramParser, parse, parse_client, print_client, print_expr, print_value, read_source,
)
from .syntax import (
    UNIT, WILDCARD,
    App, BinOp, Deref, Emit, Expr, FunId, If, Int, Lam, Loc, MkPair, Pair,
    Proj, Ref, Sym, Unit, Val, Value, Var,
    alpha_normalize, as_value, free_vars, is_closed, let, seq, subst, tup, untup,
)

__all__ = [
    "UNIT", "WILDCARD",
    "App", "BinOp", "Deref", "Emit", "Expr", "FunId", "If", "Int", "Lam", "Loc",
    "MkPair", "Pair", "Proj", "Ref", "Sym", "Unit", "Val", "Value", "Var",
    "alpha_normalize", "as_value", "free_vars", "is_closed", "let", "seq", "subst",
    "tup", "untup",
    "ClientProgram", "ProgramParser", "parse", "parse_client", "print_client",
    "print_expr", "print_value", "read_source",
    "Config", "Next", "RunResult", "RunStatus", "StepResult", "Stuck", "Terminal",
    "initial_config", "run", "run_program", "step",
    "erase", "erase_config", "erase_env",
]
