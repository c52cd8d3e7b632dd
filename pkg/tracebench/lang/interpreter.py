"""
Small-step interpreter with labelled transitions.

Reduction is leftmost-innermost under left-to-right evaluation contexts,
extended with an ``emit K`` slot. Every lambda reaching evaluation position
is named with a fresh function id (an unlabelled step); fresh ids come from
deterministic counters so runs are reproducible.
"""

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Callable, Dict, List, Mapping, Optional, Tuple, Union

from .syntax import (
    UNIT,
    App, BinOp, Deref, Emit, Expr, FunId, If, Int, Lam, Loc, MkPair, Pair,
    Proj, Ref, Val, Value, Var, as_value, subst,
)


logger = logging.getLogger(__name__)

Heap = Mapping[int, Value]
FEnv = Mapping[int, Tuple[str, Expr]]
Trace = Tuple[Value, ...]


@dataclass(frozen=True)
class Config:
    """Expression together with the heap, function environment and counters."""

    expr: Expr
    heap: Dict[int, Value] = field(default_factory=dict)
    fenv: Dict[int, Tuple[str, Expr]] = field(default_factory=dict)
    next_loc: int = 0
    next_fun: int = 0

    def __post_init__(self):
        if self.heap and self.next_loc <= max(self.heap):
            raise ValueError("next_loc must exceed every allocated location")
        if self.fenv and self.next_fun <= max(self.fenv):
            raise ValueError("next_fun must exceed every named function")


def initial_config(expr: Expr) -> Config:
    return Config(expr=expr)


@dataclass(frozen=True)
class Terminal:
    value: Value


@dataclass(frozen=True)
class Stuck:
    reason: str


@dataclass(frozen=True)
class Next:
    label: Optional[Value]
    config: Config


StepResult = Union[Terminal, Stuck, Next]


class RunStatus(str, Enum):
    VALUE = "value"
    STUCK = "stuck"
    FUEL_EXHAUSTED = "fuel-exhausted"
    HALTED = "halted"


@dataclass
class RunResult:
    """Outcome of :func:`run`.

    ``halted`` runs were stopped by the event observer; the final config is
    the one reached right after the offending event.
    """

    trace: Trace
    final: Config
    status: RunStatus
    steps: int
    stuck_reason: Optional[str] = None

    @property
    def value(self) -> Optional[Value]:
        return as_value(self.final.expr) if self.status == RunStatus.VALUE else None

    @property
    def terminated(self) -> bool:
        return self.status in (RunStatus.VALUE, RunStatus.STUCK)


# Observer called after every emitted event with the event and the trace so
# far; returning False stops the run.
EventObserver = Callable[[Value, Trace], bool]

_Reduced = Tuple[Optional[Value], Expr, Config]


def step(config: Config) -> StepResult:
    """Perform one reduction step."""
    value = as_value(config.expr)
    if value is not None:
        return Terminal(value)
    outcome = _reduce(config.expr, config)
    if isinstance(outcome, Stuck):
        return outcome
    label, expr, store = outcome
    return Next(label, replace(store, expr=expr))


def _reduce(expr: Expr, c: Config) -> Union[Stuck, _Reduced]:
    """Reduce the leftmost-innermost redex of a non-value ``expr``.

    ``c`` supplies the store; the returned config carries the updated store
    and its ``expr`` field is meaningless.
    """
    if isinstance(expr, Var):
        return Stuck(f"free variable {expr.name}")

    if isinstance(expr, Lam):
        fid = c.next_fun
        fenv = dict(c.fenv)
        fenv[fid] = (expr.param, expr.body)
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug(f"Named function #f{fid} (param {expr.param})")
        return None, Val(FunId(fid)), replace(c, fenv=fenv, next_fun=fid + 1)

    if isinstance(expr, App):
        fn = as_value(expr.fn)
        if fn is None:
            return _congruence(expr.fn, c, lambda e: App(e, expr.arg))
        arg = as_value(expr.arg)
        if arg is None:
            return _congruence(expr.arg, c, lambda e: App(expr.fn, e))
        if not isinstance(fn, FunId):
            return Stuck("application of a non-function value")
        if fn.id not in c.fenv:
            return Stuck(f"application of unknown function #f{fn.id}")
        param, body = c.fenv[fn.id]
        return None, subst(body, param, arg), c

    if isinstance(expr, If):
        cond = as_value(expr.cond)
        if cond is None:
            return _congruence(expr.cond, c, lambda e: If(e, expr.then, expr.orelse))
        if not isinstance(cond, Int):
            return Stuck("if on a non-integer condition")
        if cond.n > 0:
            return None, expr.then, c
        if cond.n == 0:
            return None, expr.orelse, c
        return Stuck("if on a negative condition")

    if isinstance(expr, MkPair):
        if as_value(expr.left) is None:
            return _congruence(expr.left, c, lambda e: MkPair(e, expr.right))
        return _congruence(expr.right, c, lambda e: MkPair(expr.left, e))

    if isinstance(expr, Proj):
        inner = as_value(expr.expr)
        if inner is None:
            return _congruence(expr.expr, c, lambda e: Proj(expr.index, e))
        if not isinstance(inner, Pair):
            return Stuck("projection of a non-pair")
        return None, Val(inner.left if expr.index == 1 else inner.right), c

    if isinstance(expr, Ref):
        inner = as_value(expr.expr)
        if inner is None:
            return _congruence(expr.expr, c, Ref)
        loc = c.next_loc
        heap = dict(c.heap)
        heap[loc] = inner
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug(f"Allocated #l{loc}")
        return None, Val(Loc(loc)), replace(c, heap=heap, next_loc=loc + 1)

    if isinstance(expr, Deref):
        inner = as_value(expr.expr)
        if inner is None:
            return _congruence(expr.expr, c, Deref)
        if not isinstance(inner, Loc):
            return Stuck("dereference of a non-location")
        if inner.id not in c.heap:
            return Stuck(f"dereference of unallocated #l{inner.id}")
        return None, Val(c.heap[inner.id]), c

    if isinstance(expr, BinOp):
        left = as_value(expr.left)
        if left is None:
            return _congruence(expr.left, c, lambda e: BinOp(expr.op, e, expr.right))
        right = as_value(expr.right)
        if right is None:
            return _congruence(expr.right, c, lambda e: BinOp(expr.op, expr.left, e))
        return _binop(expr.op, left, right, c)

    if isinstance(expr, Emit):
        inner = as_value(expr.expr)
        if inner is None:
            return _congruence(expr.expr, c, Emit)
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug(f"Emitted {inner!r}")
        return inner, Val(UNIT), c

    raise TypeError(f"Not an expression: {expr!r}")


def _congruence(sub: Expr, c: Config, plug: Callable[[Expr], Expr]) -> Union[Stuck, _Reduced]:
    outcome = _reduce(sub, c)
    if isinstance(outcome, Stuck):
        return outcome
    label, reduced, store = outcome
    return label, plug(reduced), store


def _binop(op: str, left: Value, right: Value, c: Config) -> Union[Stuck, _Reduced]:
    if op == "=":
        return None, Val(Int(1 if left == right else 0)), c
    if op == ":=":
        if not isinstance(left, Loc):
            return Stuck("assignment to a non-location")
        if left.id not in c.heap:
            return Stuck(f"assignment to unallocated #l{left.id}")
        heap = dict(c.heap)
        heap[left.id] = right
        return None, Val(UNIT), replace(c, heap=heap)
    if not isinstance(left, Int) or not isinstance(right, Int):
        return Stuck(f"operator {op} on non-integers")
    if op == "+":
        result = left.n + right.n
    elif op == "-":
        result = left.n - right.n
    elif op == "*":
        result = left.n * right.n
    else:
        result = 1 if left.n < right.n else 0
    return None, Val(Int(result)), c


def run(config: Config, fuel: int, on_event: Optional[EventObserver] = None) -> RunResult:
    """Iterate :func:`step` at most ``fuel`` times.

    Recognising a terminal or stuck configuration does not consume fuel.
    """
    if fuel < 0:
        raise ValueError("fuel must be non-negative")
    trace: List[Value] = []
    steps = 0
    while True:
        result = step(config)
        if isinstance(result, Terminal):
            status, reason = RunStatus.VALUE, None
            break
        if isinstance(result, Stuck):
            status, reason = RunStatus.STUCK, result.reason
            break
        if steps >= fuel:
            status, reason = RunStatus.FUEL_EXHAUSTED, None
            break
        steps += 1
        config = result.config
        if result.label is not None:
            trace.append(result.label)
            if on_event is not None and not on_event(result.label, tuple(trace)):
                status, reason = RunStatus.HALTED, None
                break

    logger.info(f"Run finished: status={status.value} steps={steps} events={len(trace)}")
    return RunResult(trace=tuple(trace), final=config, status=status, steps=steps, stuck_reason=reason)


def run_program(expr: Expr, fuel: int, on_event: Optional[EventObserver] = None) -> RunResult:
    return run(initial_config(expr), fuel, on_event)
